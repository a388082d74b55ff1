#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "fintop/fintop.hpp"

namespace testutil {

// Runs fn, which must throw a fintop::Error; hands back its kind.
template <class Fn>
inline fintop::ErrorKind thrown_kind(Fn&& fn) {
    try {
        fn();
    } catch (const fintop::Error& e) {
        return e.kind();
    }
    throw std::runtime_error("expected a fintop::Error");
}

inline nlohmann::json load_fixture(const std::string& name) {
    const std::string path = std::string(FINTOP_DATA_DIR) + "/" + name;
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    return j;
}

// Oracle: every permutation preserving the relation both ways, sorted.
inline std::vector<fintop::Perm> brute_automorphisms(const fintop::Preorder& p) {
    std::vector<int> img(p.n());
    std::iota(img.begin(), img.end(), 0);
    std::vector<fintop::Perm> out;
    do {
        fintop::Perm f{img};
        if (fintop::is_order_isomorphism(f, p, p)) out.push_back(f);
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// Oracle: every permutation that is continuous with continuous inverse.
inline std::vector<fintop::Perm> brute_homeos(const fintop::FiniteSpace& s) {
    std::vector<int> img(s.n());
    std::iota(img.begin(), img.end(), 0);
    std::vector<fintop::Perm> out;
    do {
        fintop::Perm f{img};
        if (fintop::is_continuous(f, s, s) && fintop::is_continuous(f.inverse(), s, s))
            out.push_back(f);
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// Oracle: graph automorphisms by brute force over vertex permutations.
inline long long brute_graph_aut_count(const fintop::SimpleGraph& g) {
    std::vector<int> img(g.n());
    std::iota(img.begin(), img.end(), 0);
    long long count = 0;
    do {
        std::vector<std::pair<int, int>> mapped;
        for (auto [u, v] : g.edges()) {
            int a = img[u], b = img[v];
            if (a > b) std::swap(a, b);
            mapped.push_back({a, b});
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == g.edges()) ++count;
    } while (std::next_permutation(img.begin(), img.end()));
    return count;
}

// Oracle: abstract isomorphism by brute force over identity-fixing bijections.
inline bool brute_group_iso(const fintop::PermGroup& g1, const fintop::PermGroup& g2) {
    if (g1.order() != g2.order()) return false;
    const int k = static_cast<int>(g1.order());
    std::vector<int> phi(k);
    std::iota(phi.begin(), phi.end(), 0);
    do {
        if (phi[0] != 0) continue;
        bool ok = true;
        for (int i = 0; ok && i < k; ++i)
            for (int j = 0; ok && j < k; ++j) {
                const int ij = g1.index_of(compose(g1.elements()[i], g1.elements()[j]));
                const int im = g2.index_of(compose(g2.elements()[phi[i]], g2.elements()[phi[j]]));
                if (im != phi[ij]) ok = false;
            }
        if (ok) return true;
    } while (std::next_permutation(phi.begin(), phi.end()));
    return false;
}

// Two disjoint copies of a poset, second one shifted.
inline fintop::Poset disjoint_union(const fintop::Poset& a, const fintop::Poset& b) {
    std::vector<std::pair<int, int>> pairs;
    for (int y = 0; y < a.n(); ++y)
        for (int x = 0; x < a.n(); ++x)
            if (x != y && a.leq(x, y)) pairs.push_back({x, y});
    for (int y = 0; y < b.n(); ++y)
        for (int x = 0; x < b.n(); ++x)
            if (x != y && b.leq(x, y)) pairs.push_back({a.n() + x, a.n() + y});
    return fintop::Poset::closure_of_pairs(a.n() + b.n(), pairs);
}

// Space with opens {}, {0,1}, {2,3}, {0,1,2,3}: two indistinguishable pairs.
inline fintop::FiniteSpace two_indiscrete_pairs() {
    return fintop::validate_topology(4, {0u, 0b0011u, 0b1100u, 0b1111u});
}

inline std::vector<std::vector<int>> cyclic_table(int k) {
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) t[a][b] = (a + b) % k;
    return t;
}

inline std::vector<std::vector<int>> klein_table() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return t;
}

// S3 as a table: 0 = id, 1 = (01), 2 = (02), 3 = (12), 4 = (012), 5 = (021).
inline std::vector<std::vector<int>> s3_table() {
    return {{0, 1, 2, 3, 4, 5}, {1, 0, 5, 4, 3, 2}, {2, 4, 0, 5, 1, 3},
            {3, 5, 4, 0, 2, 1}, {4, 2, 3, 1, 5, 0}, {5, 3, 1, 2, 0, 4}};
}

// Latin square with identity that fails associativity; not a group.
inline std::vector<std::vector<int>> loop5_table() {
    return {{0, 1, 2, 3, 4},
            {1, 0, 3, 4, 2},
            {2, 3, 4, 0, 1},
            {3, 4, 1, 2, 0},
            {4, 2, 0, 1, 3}};
}

} // namespace testutil
