#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fintop/error.hpp"
#include "fintop/perm.hpp"

namespace fintop {

// A finite permutation group held as its full element list (desk scale).
// Elements are sorted lexicographically, which puts the identity first.
// Generators are an irredundant sequence found greedily over that order.
class PermGroup {
public:
    PermGroup() = default;

    static PermGroup trivial(int degree) {
        return from_elements(degree, {Perm::identity(degree)});
    }

    // Takes a full element list; sorts, deduplicates, then checks the group
    // axioms. Violations are internal logic errors, not user input errors.
    static PermGroup from_elements(int degree, std::vector<Perm> elems) {
        PermGroup g;
        g.degree_ = degree;
        g.elements_ = std::move(elems);
        std::sort(g.elements_.begin(), g.elements_.end());
        g.elements_.erase(std::unique(g.elements_.begin(), g.elements_.end()),
                          g.elements_.end());
        if (g.elements_.empty() || !g.elements_.front().is_identity())
            throw std::logic_error("permutation set does not contain the identity");
        // Full closure check only at small orders; all callers build closed sets.
        if (g.elements_.size() <= 1024)
            for (const Perm& a : g.elements_)
                for (const Perm& b : g.elements_)
                    if (!g.contains(compose(a, b)))
                        throw std::logic_error("permutation set not closed under composition");
        g.generators_ = g.greedy_generators();
        return g;
    }

    // Closure of a generating set. Throws when the group grows past max_order.
    static PermGroup from_generators(int degree, const std::vector<Perm>& gens,
                                     long long max_order = 1000000) {
        std::set<Perm> seen{Perm::identity(degree)};
        std::vector<Perm> frontier{Perm::identity(degree)};
        while (!frontier.empty()) {
            std::vector<Perm> next;
            for (const Perm& p : frontier)
                for (const Perm& s : gens) {
                    if (s.degree() != degree)
                        throw ValidationError(ErrorKind::bad_input,
                                              "generator degree mismatch");
                    Perm q = compose(s, p);
                    if (seen.insert(q).second) {
                        if (static_cast<long long>(seen.size()) > max_order)
                            throw BoundError(ErrorKind::order_bound_exceeded,
                                             "group closure exceeds order bound " +
                                                 std::to_string(max_order));
                        next.push_back(std::move(q));
                    }
                }
            frontier = std::move(next);
        }
        return from_elements(degree, {seen.begin(), seen.end()});
    }

    int degree() const { return degree_; }
    long long order() const { return static_cast<long long>(elements_.size()); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }

    bool contains(const Perm& p) const {
        return std::binary_search(elements_.begin(), elements_.end(), p);
    }

    int index_of(const Perm& p) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
        if (it == elements_.end() || *it != p) return -1;
        return static_cast<int>(it - elements_.begin());
    }

    bool is_subgroup_of(const PermGroup& g) const {
        if (degree_ != g.degree_) return false;
        for (const Perm& p : elements_)
            if (!g.contains(p)) return false;
        return true;
    }

    // Conjugation by ambient generators suffices: conjugation by a product is
    // the composite of conjugations, and membership is closed under products.
    bool is_normal_in(const PermGroup& g) const {
        if (!is_subgroup_of(g)) return false;
        for (const Perm& c : g.generators())
            for (const Perm& h : generators_)
                if (!contains(compose(compose(c, h), c.inverse()))) return false;
        return true;
    }

    std::vector<long long> element_order_multiset() const {
        std::vector<long long> orders;
        orders.reserve(elements_.size());
        for (const Perm& p : elements_) orders.push_back(perm_element_order(p));
        std::sort(orders.begin(), orders.end());
        return orders;
    }

    friend bool operator==(const PermGroup& a, const PermGroup& b) {
        return a.degree_ == b.degree_ && a.elements_ == b.elements_;
    }

private:
    std::vector<Perm> greedy_generators() const {
        std::vector<Perm> gens;
        std::set<Perm> span{Perm::identity(degree_)};
        for (const Perm& p : elements_) {
            if (span.count(p)) continue;
            gens.push_back(p);
            // regrow the span with the new generator
            std::vector<Perm> frontier(span.begin(), span.end());
            while (!frontier.empty()) {
                std::vector<Perm> next;
                for (const Perm& q : frontier)
                    for (const Perm& s : gens) {
                        Perm r = compose(s, q);
                        if (span.insert(r).second) next.push_back(std::move(r));
                    }
                frontier = std::move(next);
            }
            if (span.size() == elements_.size()) break;
        }
        return gens;
    }

    int degree_ = 0;
    std::vector<Perm> elements_;
    std::vector<Perm> generators_;
};

namespace detail {

// Abstract multiplication view of a PermGroup: elements by index in canonical
// order, mul[i][j] = index of elements[i] o elements[j], and a BFS spanning
// word for every element in terms of the generators.
struct MultTable {
    int order = 0;
    std::vector<std::vector<int>> mul;
    std::vector<int> gens;           // element indices of the generators
    std::vector<long long> eorder;   // element orders
    std::vector<int> bfs;            // element indices in BFS discovery order; bfs[0] = 0
    std::vector<int> parent;         // parent[e], gen_used[e]: e = mul[parent][gen]
    std::vector<int> gen_used;
};

inline MultTable make_table(const PermGroup& g) {
    MultTable t;
    t.order = static_cast<int>(g.order());
    t.mul.assign(t.order, std::vector<int>(t.order));
    for (int i = 0; i < t.order; ++i)
        for (int j = 0; j < t.order; ++j)
            t.mul[i][j] = g.index_of(compose(g.elements()[i], g.elements()[j]));
    for (const Perm& s : g.generators()) t.gens.push_back(g.index_of(s));
    t.eorder.resize(t.order);
    for (int i = 0; i < t.order; ++i) t.eorder[i] = perm_element_order(g.elements()[i]);
    t.parent.assign(t.order, -1);
    t.gen_used.assign(t.order, -1);
    t.bfs.push_back(0);
    std::vector<char> seen(t.order, 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < t.bfs.size(); ++head) {
        const int e = t.bfs[head];
        for (std::size_t si = 0; si < t.gens.size(); ++si) {
            const int f = t.mul[e][t.gens[si]];
            if (!seen[f]) {
                seen[f] = 1;
                t.parent[f] = e;
                t.gen_used[f] = static_cast<int>(si);
                t.bfs.push_back(f);
            }
        }
    }
    return t;
}

// Try to extend generator images to a full isomorphism along the BFS words.
inline bool extends_to_iso(const MultTable& a, const MultTable& b,
                           const std::vector<int>& gen_images) {
    std::vector<int> phi(a.order, -1);
    phi[0] = 0;
    for (std::size_t head = 1; head < a.bfs.size(); ++head) {
        const int e = a.bfs[head];
        phi[e] = b.mul[phi[a.parent[e]]][gen_images[a.gen_used[e]]];
    }
    std::vector<char> hit(b.order, 0);
    for (int e = 0; e < a.order; ++e) {
        if (phi[e] < 0 || hit[phi[e]]) return false;
        hit[phi[e]] = 1;
        if (a.eorder[e] != b.eorder[phi[e]]) return false;
    }
    for (int i = 0; i < a.order; ++i)
        for (int j = 0; j < a.order; ++j)
            if (phi[a.mul[i][j]] != b.mul[phi[i]][phi[j]]) return false;
    return true;
}

} // namespace detail

// Abstract group isomorphism test. Fast rejection by order and element-order
// multiset, then exhaustive search over generator images.
inline bool group_iso(const PermGroup& g1, const PermGroup& g2, long long max_order = 720) {
    if (g1.order() != g2.order()) return false;
    if (g1.order() > max_order)
        throw BoundError(ErrorKind::order_bound_exceeded,
                         "isomorphism test limited to order " + std::to_string(max_order));
    if (g1.element_order_multiset() != g2.element_order_multiset()) return false;
    if (g1.order() == 1) return true;

    const detail::MultTable a = detail::make_table(g1);
    const detail::MultTable b = detail::make_table(g2);
    // candidate images per generator, filtered by element order
    std::vector<std::vector<int>> candidates(a.gens.size());
    for (std::size_t si = 0; si < a.gens.size(); ++si)
        for (int e = 0; e < b.order; ++e)
            if (b.eorder[e] == a.eorder[a.gens[si]]) candidates[si].push_back(e);

    std::vector<int> images(a.gens.size(), -1);
    auto dfs = [&](auto&& self, std::size_t k) -> bool {
        if (k == a.gens.size()) return detail::extends_to_iso(a, b, images);
        for (int e : candidates[k]) {
            images[k] = e;
            if (self(self, k + 1)) return true;
        }
        return false;
    };
    return dfs(dfs, 0);
}

} // namespace fintop
