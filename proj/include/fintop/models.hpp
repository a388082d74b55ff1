#pragma once

#include <utility>
#include <vector>

#include "fintop/preorder.hpp"
#include "fintop/space.hpp"

namespace fintop {
namespace models {

inline Poset chain(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
    return Poset::closure_of_pairs(n, pairs);
}

inline Poset antichain(int n) { return Poset::closure_of_pairs(n, {}); }

// Hub 0 below leaves 1..n.
inline Poset star(int leaves) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= leaves; ++i) pairs.push_back({0, i});
    return Poset::closure_of_pairs(leaves + 1, pairs);
}

// Minimal 0,1 each below maximal 2,3. Order complex is a 4-cycle.
inline Poset circle4() {
    return Poset::closure_of_pairs(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// Three antichain pairs stacked: 0,1 < 2,3 < 4,5. Order complex is the
// boundary of the octahedron.
inline Poset sphere6() {
    return Poset::closure_of_pairs(
        6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
}

inline FiniteSpace discrete(int n) {
    std::vector<std::uint32_t> opens;
    for (std::uint32_t m = 0; m < (1u << n); ++m) opens.push_back(m);
    return validate_topology(n, std::move(opens));
}

inline FiniteSpace indiscrete(int n) {
    return validate_topology(n, {0u, static_cast<std::uint32_t>((1u << n) - 1)});
}

// Opens {}, {0}, {0,1}: point 0 is open, point 1 is not separated from it.
inline FiniteSpace sierpinski() { return validate_topology(2, {0u, 1u, 3u}); }

// Disjoint union with one new open point n.
inline FiniteSpace add_isolated_point(const FiniteSpace& s) {
    const std::uint32_t bit = 1u << s.n();
    std::vector<std::uint32_t> opens;
    for (std::uint32_t m : s.opens()) {
        opens.push_back(m);
        opens.push_back(m | bit);
    }
    return validate_topology(s.n() + 1, std::move(opens));
}

// An indiscrete pair {0,1} next to an open point {2}. Smallest space whose
// quotient has an automorphism blocked by the class sizes.
inline FiniteSpace pair_plus_point() {
    return validate_topology(3, {0u, 0b011u, 0b100u, 0b111u});
}

} // namespace models
} // namespace fintop
