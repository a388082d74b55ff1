#pragma once

#include <utility>
#include <vector>

#include "fintop/bitset.hpp"
#include "fintop/error.hpp"
#include "fintop/perm.hpp"

namespace fintop {

// Reflexive transitive relation on {0..n-1}. Stored per element as the down-set
// row: down(b) = { a : a <= b }.
class Preorder {
public:
    Preorder() = default;

    // Rows must already be reflexive and transitive; validated.
    static Preorder from_down_sets(std::vector<Bitset> down) {
        Preorder p;
        p.n_ = static_cast<int>(down.size());
        p.down_ = std::move(down);
        for (int b = 0; b < p.n_; ++b) {
            if (p.down_[b].size() != p.n_ || !p.down_[b].test(b))
                throw ValidationError(ErrorKind::bad_input, "relation is not reflexive");
        }
        for (int b = 0; b < p.n_; ++b)
            for (int k = p.down_[b].next(); k < p.n_; k = p.down_[b].next(k + 1))
                if (!p.down_[k].is_subset_of(p.down_[b]))
                    throw ValidationError(ErrorKind::bad_input, "relation is not transitive");
        return p;
    }

    // Reflexive-transitive closure of an arbitrary pair list (a <= b per pair).
    static Preorder closure_of_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        std::vector<Bitset> down(n, Bitset(n));
        for (int i = 0; i < n; ++i) down[i].set(i);
        for (auto [a, b] : pairs) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw ValidationError(ErrorKind::bad_input, "relation pair out of range");
            down[b].set(a);
        }
        // Warshall over intermediate element k: a <= k <= b implies a <= b.
        for (int k = 0; k < n; ++k)
            for (int b = 0; b < n; ++b)
                if (down[b].test(k)) down[b] |= down[k];
        Preorder p;
        p.n_ = n;
        p.down_ = std::move(down);
        return p;
    }

    int n() const { return n_; }

    bool leq(int a, int b) const { return down_[b].test(a); }

    const Bitset& down(int b) const { return down_[b]; }

    Bitset strict_down(int b) const {
        Bitset s = down_[b];
        s.reset(b);
        return s;
    }

    // Column a of the relation: { b : a <= b }.
    Bitset up(int a) const {
        Bitset u(n_);
        for (int b = 0; b < n_; ++b)
            if (down_[b].test(a)) u.set(b);
        return u;
    }

    Bitset strict_up(int a) const {
        Bitset u = up(a);
        u.reset(a);
        return u;
    }

    bool is_antisymmetric() const {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (leq(a, b) && leq(b, a)) return false;
        return true;
    }

    friend bool operator==(const Preorder&, const Preorder&) = default;

private:
    int n_ = 0;
    std::vector<Bitset> down_;
};

// Preorder that is additionally antisymmetric.
class Poset : public Preorder {
public:
    Poset() = default;

    explicit Poset(const Preorder& p) : Preorder(p) {
        if (!is_antisymmetric())
            throw ValidationError(ErrorKind::bad_input, "relation is not antisymmetric");
    }

    static Poset from_down_sets(std::vector<Bitset> down) {
        return Poset(Preorder::from_down_sets(std::move(down)));
    }

    static Poset closure_of_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        return Poset(Preorder::closure_of_pairs(n, pairs));
    }
};

// Partition of points into classes of topological indistinguishability
// (equal down-sets, i.e. mutual <=). Classes are numbered by smallest member.
struct QuotientMap {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
    std::vector<int> weights; // weights[c] = |classes[c]|
};

inline QuotientMap indistinguishability_classes(const Preorder& p) {
    const int n = p.n();
    QuotientMap q;
    q.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (q.class_of[x] >= 0) continue;
        const int c = static_cast<int>(q.classes.size());
        std::vector<int> members{x};
        q.class_of[x] = c;
        for (int y = x + 1; y < n; ++y)
            if (q.class_of[y] < 0 && p.down(y) == p.down(x)) {
                q.class_of[y] = c;
                members.push_back(y);
            }
        q.classes.push_back(std::move(members));
    }
    for (const auto& cls : q.classes) q.weights.push_back(static_cast<int>(cls.size()));
    return q;
}

// Collapse a preorder along its indistinguishability classes. The result is a
// poset; quotienting something already antisymmetric is the identity up to the
// canonical relabeling.
inline std::pair<Poset, QuotientMap> t0_quotient(const Preorder& p) {
    QuotientMap q = indistinguishability_classes(p);
    const int m = static_cast<int>(q.classes.size());
    std::vector<Bitset> down(m, Bitset(m));
    for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
            if (p.leq(q.classes[c][0], q.classes[d][0])) down[d].set(c);
    return {Poset::from_down_sets(std::move(down)), std::move(q)};
}

// Restriction of the relation to the given elements (ascending original
// indices), relabeled densely.
inline Preorder induced_preorder(const Preorder& p, const std::vector<int>& keep) {
    const int m = static_cast<int>(keep.size());
    std::vector<Bitset> down(m, Bitset(m));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            if (p.leq(keep[i], keep[j])) down[j].set(i);
    return Preorder::from_down_sets(std::move(down));
}

inline Poset induced_poset(const Poset& p, const std::vector<int>& keep) {
    return Poset(induced_preorder(p, keep));
}

// Relabel the relation along a permutation: new element f(x) plays the role of x.
inline Preorder relabel(const Preorder& p, const Perm& f) {
    const int n = p.n();
    std::vector<Bitset> down(n, Bitset(n));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            if (p.leq(a, b)) down[f[b]].set(f[a]);
    return Preorder::from_down_sets(std::move(down));
}

// f is an isomorphism of preorders iff a <= b exactly when f(a) <= f(b).
inline bool is_order_isomorphism(const Perm& f, const Preorder& dom, const Preorder& cod) {
    if (f.degree() != dom.n() || dom.n() != cod.n()) return false;
    for (int b = 0; b < dom.n(); ++b)
        for (int a = 0; a < dom.n(); ++a)
            if (dom.leq(a, b) != cod.leq(f[a], f[b])) return false;
    return true;
}

} // namespace fintop
