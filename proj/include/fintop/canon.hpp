#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fintop/error.hpp"
#include "fintop/preorder.hpp"

namespace fintop {

// Isomorphism-class key: the minimum over all relabelings of the relation
// matrix packed row-major into 64 bits. Brute force, so capped at 8 points.
struct CanonKey {
    int n = 0;
    std::uint64_t bits = 0;

    friend bool operator==(const CanonKey&, const CanonKey&) = default;
    friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
};

inline CanonKey canonical_key(const Preorder& p) {
    const int n = p.n();
    if (n > 8)
        throw BoundError(ErrorKind::search_bound_exceeded,
                         "canonical form limited to 8 points, got " + std::to_string(n));
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t bits = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (p.leq(sigma[a], sigma[b])) bits |= 1ull << (a * n + b);
        best = std::min(best, bits);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return CanonKey{n, best};
}

inline bool preorder_isomorphic(const Preorder& a, const Preorder& b) {
    if (a.n() != b.n()) return false;
    return canonical_key(a) == canonical_key(b);
}

inline bool poset_isomorphic(const Poset& a, const Poset& b) {
    return preorder_isomorphic(a, b);
}

} // namespace fintop
