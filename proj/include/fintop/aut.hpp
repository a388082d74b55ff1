#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "fintop/error.hpp"
#include "fintop/group.hpp"
#include "fintop/perm.hpp"
#include "fintop/poset_invariants.hpp"
#include "fintop/preorder.hpp"

namespace fintop {

struct AutOptions {
    int max_points = 12;          // ground-set cap for the default search
    long long max_order = 100000; // cap on the materialized group order
    long long max_nodes = 50000000;
};

namespace detail {

// Isomorphism-invariant initial coloring: indistinguishability class size,
// class height in the T0 quotient, size of the class's down-equivalence cell,
// and the point's own down/up counts.
inline std::vector<int> initial_colors(const Preorder& p) {
    const int n = p.n();
    const auto [qposet, qmap] = t0_quotient(p);
    const HeightProfile hp = height_profile(qposet);
    const DownEqPartition de = down_equivalence(qposet);
    std::vector<std::size_t> de_size(de.classes.size());
    for (std::size_t i = 0; i < de.classes.size(); ++i)
        de_size[i] = de.classes[i].size();

    std::map<std::vector<long long>, std::vector<int>> cells;
    for (int x = 0; x < n; ++x) {
        const int c = qmap.class_of[x];
        std::vector<long long> key{
            static_cast<long long>(qmap.classes[c].size()),
            static_cast<long long>(hp.height[c]),
            static_cast<long long>(de_size[de.class_of[c]]),
            static_cast<long long>(p.down(x).count()),
            static_cast<long long>(p.up(x).count())};
        cells[key].push_back(x);
    }
    std::vector<int> color(n);
    int next = 0;
    for (const auto& [key, pts] : cells) {
        for (int x : pts) color[x] = next;
        ++next;
    }
    return color;
}

// One-dimensional Weisfeiler–Leman refinement over the relation matrix.
inline void refine_colors(const Preorder& p, std::vector<int>& color) {
    const int n = p.n();
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> cells;
        for (int x = 0; x < n; ++x) {
            std::vector<int> sig;
            sig.reserve(2 * n);
            for (int y = 0; y < n; ++y) {
                if (y == x) continue;
                if (p.leq(x, y)) sig.push_back(2 * color[y]);
                if (p.leq(y, x)) sig.push_back(2 * color[y] + 1);
            }
            std::sort(sig.begin(), sig.end());
            cells[{color[x], std::move(sig)}].push_back(x);
        }
        if (static_cast<int>(cells.size()) ==
            1 + *std::max_element(color.begin(), color.end()))
            return;
        int next = 0;
        for (const auto& [key, pts] : cells) {
            for (int x : pts) color[x] = next;
            ++next;
        }
    }
}

} // namespace detail

// All self-bijections preserving the relation both ways, as a PermGroup.
// Backtracking over points; candidates limited to the same refined color cell.
inline PermGroup automorphism_group(const Preorder& p, const AutOptions& opt = {}) {
    const int n = p.n();
    if (n > opt.max_points)
        throw BoundError(ErrorKind::search_bound_exceeded,
                         "automorphism search limited to " +
                             std::to_string(opt.max_points) + " points, got " +
                             std::to_string(n));
    if (n == 0) return PermGroup::trivial(0);

    std::vector<int> color = detail::initial_colors(p);
    detail::refine_colors(p, color);
    const int ncolors = 1 + *std::max_element(color.begin(), color.end());
    std::vector<int> cell_size(ncolors, 0);
    for (int x = 0; x < n; ++x) ++cell_size[color[x]];
    std::vector<std::vector<int>> by_color(ncolors);
    for (int x = 0; x < n; ++x) by_color[color[x]].push_back(x);

    // Placement order: grow a front that stays related to what is placed,
    // preferring points from small cells.
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    auto pick = [&]() {
        int best = -1;
        std::tuple<long long, int, int> best_key{-1, 0, 0};
        for (int x = 0; x < n; ++x) {
            if (placed[x]) continue;
            long long rel = 0;
            for (int y : order)
                rel += (p.leq(x, y) ? 1 : 0) + (p.leq(y, x) ? 1 : 0);
            // most related to the placed front, then small cells, then low index
            std::tuple<long long, int, int> key{rel, -cell_size[color[x]], -x};
            if (key > best_key) {
                best_key = key;
                best = x;
            }
        }
        return best;
    };
    for (int i = 0; i < n; ++i) {
        int x = pick();
        placed[x] = 1;
        order.push_back(x);
    }

    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    std::vector<Perm> found;
    long long nodes = 0;

    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            found.push_back(Perm(std::vector<int>(image.begin(), image.end())));
            if (static_cast<long long>(found.size()) > opt.max_order)
                throw BoundError(ErrorKind::order_bound_exceeded,
                                 "automorphism group exceeds order bound " +
                                     std::to_string(opt.max_order));
            return;
        }
        const int x = order[depth];
        for (int y : by_color[color[x]]) {
            if (used[y]) continue;
            if (++nodes > opt.max_nodes)
                throw BoundError(ErrorKind::search_bound_exceeded,
                                 "automorphism search node budget exceeded");
            bool ok = true;
            for (int d = 0; d < depth; ++d) {
                const int u = order[d];
                const int v = image[u];
                if (p.leq(x, u) != p.leq(y, v) || p.leq(u, x) != p.leq(v, y)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[x] = y;
            used[y] = 1;
            self(self, depth + 1);
            image[x] = -1;
            used[y] = 0;
        }
    };
    dfs(dfs, 0);
    return PermGroup::from_elements(n, std::move(found));
}

} // namespace fintop
