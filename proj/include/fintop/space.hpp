#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "fintop/error.hpp"
#include "fintop/perm.hpp"
#include "fintop/preorder.hpp"

namespace fintop {

namespace detail {
inline std::string mask_to_string(std::uint32_t m) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if (m & (1u << i)) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
    return s + "}";
}
} // namespace detail

// A topology on points {0..n-1}, stored as the full family of open sets.
// Each open set is a bit mask over the points, so n is capped at 16; larger
// spaces are handled through their specialization preorder instead.
class FiniteSpace {
public:
    static constexpr int max_points = 16;

    int n() const { return n_; }

    std::uint32_t full_mask() const { return n_ == 0 ? 0u : (1u << n_) - 1; }

    // Sorted ascending as integers, deduplicated.
    const std::vector<std::uint32_t>& opens() const { return opens_; }

    bool is_open(std::uint32_t mask) const {
        return std::binary_search(opens_.begin(), opens_.end(), mask);
    }

    // Smallest open set containing x (the intersection of all opens that do).
    std::uint32_t min_open(int x) const { return min_open_[x]; }

    friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;
    friend bool operator<(const FiniteSpace& a, const FiniteSpace& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.opens_ < b.opens_;
    }

    friend FiniteSpace validate_topology(int n, std::vector<std::uint32_t> opens);

private:
    int n_ = 0;
    std::vector<std::uint32_t> opens_;
    std::vector<std::uint32_t> min_open_;
};

// Checks the finite topology axioms: empty and full set present, family closed
// under pairwise union and intersection (which in the finite case gives
// closure under arbitrary ones). Input is deduplicated.
inline FiniteSpace validate_topology(int n, std::vector<std::uint32_t> opens) {
    if (n < 0 || n > FiniteSpace::max_points)
        throw ValidationError(ErrorKind::bad_input,
                              "point count must be between 0 and " +
                                  std::to_string(FiniteSpace::max_points));
    const std::uint32_t full = n == 0 ? 0u : (1u << n) - 1;
    for (std::uint32_t m : opens)
        if (m & ~full)
            throw ValidationError(ErrorKind::bad_input, "open set mentions a point outside the space");
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

    auto member = [&](std::uint32_t m) {
        return std::binary_search(opens.begin(), opens.end(), m);
    };
    if (!member(0) || !member(full))
        throw ValidationError(ErrorKind::missing_empty_or_full,
                              "topology must contain the empty set and the full set");
    for (std::size_t i = 0; i < opens.size(); ++i)
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            if (!member(opens[i] | opens[j]))
                throw ValidationError(ErrorKind::not_closed_under_union,
                                      "family not closed under union: " +
                                          detail::mask_to_string(opens[i]) + " u " +
                                          detail::mask_to_string(opens[j]));
            if (!member(opens[i] & opens[j]))
                throw ValidationError(ErrorKind::not_closed_under_intersection,
                                      "family not closed under intersection: " +
                                          detail::mask_to_string(opens[i]) + " n " +
                                          detail::mask_to_string(opens[j]));
        }

    FiniteSpace s;
    s.n_ = n;
    s.opens_ = std::move(opens);
    s.min_open_.assign(n, full);
    for (int x = 0; x < n; ++x)
        for (std::uint32_t m : s.opens_)
            if (m & (1u << x)) s.min_open_[x] &= m;
    return s;
}

// x <= y iff every open set containing y contains x, i.e. x lies in the
// minimal open set of y. Open sets are exactly the lower sets of this relation.
inline Preorder specialization_preorder(const FiniteSpace& s) {
    const int n = s.n();
    std::vector<Bitset> down(n, Bitset(n));
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            if (s.min_open(y) & (1u << x)) down[y].set(x);
    return Preorder::from_down_sets(std::move(down));
}

// The topology whose opens are all lower sets of the relation. Inverse of
// specialization_preorder on spaces of this kind.
inline FiniteSpace space_from_preorder(const Preorder& p) {
    const int n = p.n();
    if (n > FiniteSpace::max_points)
        throw BoundError(ErrorKind::bound_exceeded,
                         "explicit open-set families are limited to " +
                             std::to_string(FiniteSpace::max_points) + " points");
    std::vector<std::uint32_t> min_open(n, 0);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            if (p.leq(x, y)) min_open[y] |= 1u << x;
    std::vector<std::uint32_t> opens;
    const std::uint32_t full = n == 0 ? 0u : (1u << n) - 1;
    for (std::uint32_t m = 0;; ++m) {
        bool lower = true;
        for (int y = 0; lower && y < n; ++y)
            if ((m & (1u << y)) && (min_open[y] & ~m)) lower = false;
        if (lower) opens.push_back(m);
        if (m == full) break;
    }
    return validate_topology(n, std::move(opens));
}

inline FiniteSpace order_topology(const Poset& p) { return space_from_preorder(p); }

// Preimage of every open set of the codomain must be open in the domain.
inline bool is_continuous(const Perm& f, const FiniteSpace& dom, const FiniteSpace& cod) {
    if (f.degree() != dom.n() || dom.n() != cod.n()) return false;
    for (std::uint32_t v : cod.opens()) {
        std::uint32_t pre = 0;
        for (int x = 0; x < dom.n(); ++x)
            if (v & (1u << f[x])) pre |= 1u << x;
        if (!dom.is_open(pre)) return false;
    }
    return true;
}

inline QuotientMap indistinguishability_classes(const FiniteSpace& s) {
    return indistinguishability_classes(specialization_preorder(s));
}

inline std::pair<Poset, QuotientMap> t0_quotient(const FiniteSpace& s) {
    return t0_quotient(specialization_preorder(s));
}

inline bool is_t0(const FiniteSpace& s) {
    return specialization_preorder(s).is_antisymmetric();
}

} // namespace fintop
