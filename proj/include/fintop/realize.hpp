#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fintop/aut.hpp"
#include "fintop/error.hpp"
#include "fintop/graph.hpp"
#include "fintop/group.hpp"
#include "fintop/perm.hpp"
#include "fintop/preorder.hpp"

namespace fintop {

// A finite group by its multiplication table. Element 0 is the identity.
// An empty generator list means "all non-identity elements".
struct GroupSpec {
    int order = 0;
    std::vector<std::vector<int>> table; // table[a][b] = a*b
    std::vector<int> generators;

    static GroupSpec from_table(std::vector<std::vector<int>> t,
                                std::vector<int> gens = {}) {
        GroupSpec g;
        g.order = static_cast<int>(t.size());
        if (g.order == 0) throw Error(ErrorKind::not_a_group, "empty table");
        for (const auto& row : t)
            if (row.size() != t.size())
                throw Error(ErrorKind::not_a_group, "table is not square");
        for (const auto& row : t)
            for (int v : row)
                if (v < 0 || v >= g.order)
                    throw Error(ErrorKind::not_a_group, "table entry out of range");
        for (int b = 0; b < g.order; ++b)
            if (t[0][b] != b || t[b][0] != b)
                throw Error(ErrorKind::not_a_group, "element 0 is not an identity");
        // rows and columns are permutations, so inverses exist
        for (int a = 0; a < g.order; ++a) {
            std::vector<char> row_hit(g.order, 0), col_hit(g.order, 0);
            for (int b = 0; b < g.order; ++b) {
                if (row_hit[t[a][b]] || col_hit[t[b][a]])
                    throw Error(ErrorKind::not_a_group, "table row or column repeats");
                row_hit[t[a][b]] = col_hit[t[b][a]] = 1;
            }
        }
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                for (int c = 0; c < g.order; ++c)
                    if (t[t[a][b]][c] != t[a][t[b][c]])
                        throw Error(ErrorKind::not_a_group, "table is not associative");
        for (int s : gens)
            if (s <= 0 || s >= g.order)
                throw ValidationError(ErrorKind::bad_input,
                                      "generator index out of range or identity");
        g.table = std::move(t);
        g.generators = std::move(gens);
        return g;
    }

    // Closes a permutation generating set and converts to a table. The given
    // permutations become the stored generator list.
    static GroupSpec from_perm_generators(int degree, const std::vector<Perm>& gens,
                                          long long max_order = 1000) {
        const PermGroup g = PermGroup::from_generators(degree, gens, max_order);
        const int k = static_cast<int>(g.order());
        std::vector<std::vector<int>> t(k, std::vector<int>(k));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                t[a][b] = g.index_of(compose(g.elements()[a], g.elements()[b]));
        std::vector<int> gen_idx;
        for (const Perm& s : gens) {
            const int i = g.index_of(s);
            if (i > 0) gen_idx.push_back(i);
        }
        std::sort(gen_idx.begin(), gen_idx.end());
        gen_idx.erase(std::unique(gen_idx.begin(), gen_idx.end()), gen_idx.end());
        return from_table(std::move(t), std::move(gen_idx));
    }

    std::vector<int> generator_list() const {
        if (!generators.empty()) return generators;
        std::vector<int> all;
        for (int s = 1; s < order; ++s) all.push_back(s);
        return all;
    }

    // Left regular action a -> (x -> a*x); faithful, so its image is an
    // isomorphic PermGroup.
    PermGroup regular_representation() const {
        std::vector<Perm> elems;
        for (int a = 0; a < order; ++a) elems.push_back(Perm(table[a]));
        return PermGroup::from_elements(order, std::move(elems));
    }

    bool generators_generate() const {
        std::set<int> span{0};
        std::vector<int> frontier{0};
        const std::vector<int> gens = generator_list();
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int a : frontier)
                for (int s : gens)
                    if (span.insert(table[a][s]).second) next.push_back(table[a][s]);
            frontier = std::move(next);
        }
        return static_cast<int>(span.size()) == order;
    }
};

// Vertices are the group elements; each generator s contributes the arcs
// a -> a*s in its own color.
inline ColoredDigraph cayley_graph(const GroupSpec& g) {
    if (!g.generators_generate())
        throw ValidationError(ErrorKind::bad_input,
                              "generators do not generate the group");
    const std::vector<int> gens = g.generator_list();
    ColoredDigraph d;
    d.vertices = g.order;
    d.colors = static_cast<int>(gens.size());
    for (int a = 0; a < g.order; ++a)
        for (std::size_t si = 0; si < gens.size(); ++si)
            d.arcs.push_back({a, g.table[a][gens[si]], static_cast<int>(si)});
    return d;
}

enum class FruchtRoute { gadget, fixed_order1, fixed_order2 };

struct FruchtResult {
    SimpleGraph graph;
    FruchtRoute route = FruchtRoute::gadget;
};

// Replaces every colored arc with an asymmetric gadget: the arc is subdivided
// into a 2-vertex path, a pendant tail of length 2k+1 hangs off the vertex
// next to the source and a tail of length 2k+2 off the vertex next to the
// target, where k is the color. Tail lengths encode color and direction, so
// graph automorphisms restrict to color-preserving digraph automorphisms,
// which are exactly the left translations of the group. The path must have
// exactly 2 vertices: with 3 the plain middle vertex makes the decoration
// pattern around a single-generator cycle palindromic, and the dihedral
// reflection survives, mapping group vertices onto middle vertices.
inline FruchtResult frucht_graph(const ColoredDigraph& d) {
    if (d.vertices == 1) {
        // smallest asymmetric graph: a 6-path with one chord
        return {SimpleGraph::from_edges(
                    6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}}),
                FruchtRoute::fixed_order1};
    }
    if (d.vertices == 2) {
        // path on 3 vertices: the end swap is the only symmetry
        return {SimpleGraph::from_edges(3, {{0, 1}, {1, 2}}), FruchtRoute::fixed_order2};
    }
    GraphBuilder b;
    for (int v = 0; v < d.vertices; ++v) b.add_vertex();
    for (const ColoredArc& arc : d.arcs) {
        const int p0 = b.add_vertex();
        const int p1 = b.add_vertex();
        b.add_edge(arc.source, p0);
        b.add_edge(p0, p1);
        b.add_edge(p1, arc.target);
        b.add_tail(p0, 2 * arc.color + 1);
        b.add_tail(p1, 2 * arc.color + 2);
    }
    return {b.build(), FruchtRoute::gadget};
}

// Elements: the vertices at height 0 and the edges at height 1, a vertex
// below each edge it lies on. Order isomorphisms preserve height, so the
// poset has the same automorphisms as the graph.
inline Poset incidence_poset(const SimpleGraph& g) {
    const std::vector<int> deg = g.degrees();
    for (int v = 0; v < g.n(); ++v)
        if (deg[v] == 0)
            throw Error(ErrorKind::isolated_vertex,
                        "vertex " + std::to_string(v) + " lies on no edge");
    if (g.edges().size() < 2)
        throw Error(ErrorKind::too_few_edges, "need at least 2 edges, got " +
                                                  std::to_string(g.edges().size()));
    for (std::size_t i = 0; i + 1 < g.edges().size(); ++i)
        if (g.edges()[i] == g.edges()[i + 1])
            throw Error(ErrorKind::ambiguous_incidence,
                        "two edges share both endpoints");
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        pairs.push_back({g.edges()[e].first, g.n() + static_cast<int>(e)});
        pairs.push_back({g.edges()[e].second, g.n() + static_cast<int>(e)});
    }
    return Poset::closure_of_pairs(g.n() + static_cast<int>(g.edges().size()), pairs);
}

enum class RealizeRoute { direct, pipeline };

struct RealizeOptions {
    long long max_group_order = 24;
    int max_poset_size = 5000;
};

struct Realization {
    Poset poset;
    RealizeRoute route = RealizeRoute::pipeline;
    FruchtRoute frucht_route = FruchtRoute::gadget;
    PermGroup aut; // automorphisms of the poset, certified isomorphic to the input
};

// Builds a poset whose automorphism group is isomorphic to the given group,
// then certifies that by searching the automorphisms and testing isomorphism.
inline Realization realize_group(const GroupSpec& g, const RealizeOptions& opt = {}) {
    if (g.order > opt.max_group_order)
        throw BoundError(ErrorKind::order_bound_exceeded,
                         "realization limited to group order " +
                             std::to_string(opt.max_group_order) + ", got " +
                             std::to_string(g.order));
    Realization r;
    if (g.order == 1) {
        r.poset = Poset::closure_of_pairs(2, {{0, 1}});
        r.route = RealizeRoute::direct;
    } else if (g.order == 2) {
        r.poset = Poset::closure_of_pairs(2, {});
        r.route = RealizeRoute::direct;
    } else {
        const FruchtResult f = frucht_graph(cayley_graph(g));
        r.frucht_route = f.route;
        const int size = f.graph.n() + static_cast<int>(f.graph.edges().size());
        if (size > opt.max_poset_size)
            throw BoundError(
                ErrorKind::bound_exceeded,
                "realized poset would have " + std::to_string(size) +
                    " elements, over the limit " + std::to_string(opt.max_poset_size) +
                    "; provide a smaller generating set");
        r.poset = incidence_poset(f.graph);
        r.route = RealizeRoute::pipeline;
    }
    AutOptions aopt;
    aopt.max_points = std::max(opt.max_poset_size, r.poset.n());
    aopt.max_order = std::max<long long>(2 * opt.max_group_order, 64);
    try {
        r.aut = automorphism_group(r.poset, aopt);
    } catch (const BoundError&) {
        throw Error(ErrorKind::verification_failed,
                    "poset automorphism group is larger than the input group");
    }
    if (r.aut.order() != g.order ||
        !group_iso(r.aut, g.regular_representation(),
                   std::max<long long>(g.order, 720)))
        throw Error(ErrorKind::verification_failed,
                    "realized poset has automorphism group of order " +
                        std::to_string(r.aut.order()) + ", expected " +
                        std::to_string(g.order));
    return r;
}

} // namespace fintop
