#pragma once

#include <numeric>
#include <vector>

#include "fintop/preorder.hpp"

namespace fintop {

// A point is removable when its strict down-set has a maximum or its strict
// up-set has a minimum; removal keeps the homotopy type.
inline bool is_beat_point(const Poset& p, int a) {
    const Bitset d = p.strict_down(a);
    for (int m = d.next(0); m < p.n(); m = d.next(m + 1))
        if (d.is_subset_of(p.down(m))) return true;
    const Bitset u = p.strict_up(a);
    for (int m = u.next(0); m < p.n(); m = u.next(m + 1))
        if (u.is_subset_of(p.up(m))) return true;
    return false;
}

inline std::vector<int> beat_points(const Poset& p) {
    std::vector<int> out;
    for (int a = 0; a < p.n(); ++a)
        if (is_beat_point(p, a)) out.push_back(a);
    return out;
}

struct CoreResult {
    Poset core;
    std::vector<int> kept; // original indices of the surviving points, ascending
};

// Removes the lowest-index beat point until none remain.
inline CoreResult core(const Poset& p) {
    Poset cur = p;
    std::vector<int> kept(p.n());
    std::iota(kept.begin(), kept.end(), 0);
    for (;;) {
        int b = -1;
        for (int a = 0; a < cur.n(); ++a)
            if (is_beat_point(cur, a)) {
                b = a;
                break;
            }
        if (b < 0) break;
        kept.erase(kept.begin() + b);
        std::vector<int> keep;
        for (int a = 0; a < cur.n(); ++a)
            if (a != b) keep.push_back(a);
        cur = induced_poset(cur, keep);
    }
    return {cur, kept};
}

inline bool is_contractible(const Poset& p) { return core(p).core.n() <= 1; }

} // namespace fintop
