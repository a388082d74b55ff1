#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "fintop/preorder.hpp"

namespace fintop {

// Ht(a): length of the longest chain a_0 < ... < a_k = a ending at a.
// Minimal elements have height 0; a < b forces Ht(a) < Ht(b).
struct HeightProfile {
    std::vector<int> height;
    int max_height = 0;
};

// Covering pairs (b, a) with b < a and nothing strictly between.
inline std::vector<std::pair<int, int>> cover_relations(const Poset& p) {
    const int n = p.n();
    std::vector<Bitset> strict_up(n);
    for (int a = 0; a < n; ++a) strict_up[a] = p.strict_up(a);
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a) {
        const Bitset below = p.strict_down(a);
        for (int b = below.next(); b < n; b = below.next(b + 1)) {
            Bitset between = below;
            between &= strict_up[b];
            if (between.none()) covers.emplace_back(b, a);
        }
    }
    return covers;
}

// Longest-path recurrence over the covering relation, processed in a linear
// extension (ordered by down-set size).
inline HeightProfile height_profile(const Poset& p) {
    const int n = p.n();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int ca = p.down(a).count(), cb = p.down(b).count();
        return ca != cb ? ca < cb : a < b;
    });
    std::vector<std::vector<int>> covered_by(n); // covered_by[a] = elements a covers
    for (auto [b, a] : cover_relations(p)) covered_by[a].push_back(b);

    HeightProfile h;
    h.height.assign(n, 0);
    for (int a : order)
        for (int b : covered_by[a])
            h.height[a] = std::max(h.height[a], h.height[b] + 1);
    for (int a = 0; a < n; ++a) h.max_height = std::max(h.max_height, h.height[a]);
    return h;
}

// All nonempty chains a_0 < a_1 < ..., as strictly increasing element lists,
// in lexicographic order. Singletons count.
inline std::vector<std::vector<int>> all_chains(const Poset& p) {
    const int n = p.n();
    std::vector<std::vector<int>> out;
    std::vector<int> chain;
    auto extend = [&](auto&& self, int last) -> void {
        out.push_back(chain);
        for (int next = 0; next < n; ++next) {
            if (next == last || !p.leq(last, next)) continue;
            chain.push_back(next);
            self(self, next);
            chain.pop_back();
        }
    };
    for (int start = 0; start < n; ++start) {
        chain.assign(1, start);
        extend(extend, start);
    }
    return out;
}

// Partition by equality of strict down-sets: a ~ a' iff for all b, b < a
// exactly when b < a'. Classes are numbered by smallest member.
struct DownEqPartition {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
};

inline DownEqPartition down_equivalence(const Poset& p) {
    const int n = p.n();
    DownEqPartition d;
    d.class_of.assign(n, -1);
    std::vector<Bitset> strict(n);
    for (int a = 0; a < n; ++a) strict[a] = p.strict_down(a);
    for (int a = 0; a < n; ++a) {
        if (d.class_of[a] >= 0) continue;
        const int c = static_cast<int>(d.classes.size());
        std::vector<int> members{a};
        d.class_of[a] = c;
        for (int b = a + 1; b < n; ++b)
            if (d.class_of[b] < 0 && strict[b] == strict[a]) {
                d.class_of[b] = c;
                members.push_back(b);
            }
        d.classes.push_back(std::move(members));
    }
    return d;
}

} // namespace fintop
