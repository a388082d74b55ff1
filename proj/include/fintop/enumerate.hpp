#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fintop/bitset.hpp"
#include "fintop/canon.hpp"
#include "fintop/error.hpp"
#include "fintop/preorder.hpp"
#include "fintop/space.hpp"

namespace fintop {

namespace detail {

// rows[b] is the down-set of b as a bitmask, diagonal already set.
inline bool rows_transitive(const std::vector<std::uint32_t>& rows) {
    const int n = static_cast<int>(rows.size());
    for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k)
            if ((rows[b] >> k) & 1u)
                if (rows[k] & ~rows[b]) return false;
    return true;
}

inline Preorder preorder_from_rows(const std::vector<std::uint32_t>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<Bitset> down(n, Bitset(n));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            if ((rows[b] >> a) & 1u) down[b].set(a);
    return Preorder::from_down_sets(std::move(down));
}

// Runs fn on each reflexive transitive relation; fn may reject antisymmetry
// violations itself.
template <class Fn>
inline void for_each_preorder(int n, Fn&& fn) {
    // one bit per ordered pair (a, b), a != b
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) slots.push_back({a, b});
    const std::uint64_t patterns = 1ull << slots.size();
    std::vector<std::uint32_t> rows(n);
    for (std::uint64_t pat = 0; pat < patterns; ++pat) {
        for (int b = 0; b < n; ++b) rows[b] = 1u << b;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((pat >> i) & 1ull) rows[slots[i].second] |= 1u << slots[i].first;
        if (rows_transitive(rows)) fn(rows);
    }
}

} // namespace detail

// All reflexive transitive relations on n labeled points, by increasing
// relation pattern. Brute force, so n is capped where 2^(n(n-1)) stays small.
inline std::vector<Preorder> enumerate_preorders(int n) {
    if (n < 0 || n > 4)
        throw BoundError(ErrorKind::bound_exceeded,
                         "preorder enumeration limited to 4 points, got " +
                             std::to_string(n));
    std::vector<Preorder> out;
    detail::for_each_preorder(
        n, [&](const std::vector<std::uint32_t>& rows) {
            out.push_back(detail::preorder_from_rows(rows));
        });
    return out;
}

// Antisymmetric subset of the same brute force; one more point is affordable
// because the check prunes nothing until the end.
inline std::vector<Poset> enumerate_posets(int n) {
    if (n < 0 || n > 5)
        throw BoundError(ErrorKind::bound_exceeded,
                         "poset enumeration limited to 5 points, got " +
                             std::to_string(n));
    std::vector<Poset> out;
    detail::for_each_preorder(n, [&](const std::vector<std::uint32_t>& rows) {
        const int m = static_cast<int>(rows.size());
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (((rows[b] >> a) & 1u) && ((rows[a] >> b) & 1u)) return;
        out.push_back(Poset(detail::preorder_from_rows(rows)));
    });
    return out;
}

// Independent oracle: posets whose relation respects the natural point order
// (a < b only when a precedes b), hit with every relabeling, deduplicated.
// Agrees with enumerate_posets and reaches one point further.
inline std::vector<Poset> enumerate_posets_via_relabelings(int n) {
    if (n < 0 || n > 6)
        throw BoundError(ErrorKind::bound_exceeded,
                         "relabeling enumeration limited to 6 points, got " +
                             std::to_string(n));
    std::vector<std::pair<int, int>> slots; // (a, b) with a < b
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) slots.push_back({a, b});

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        do perms.push_back(sigma);
        while (std::next_permutation(sigma.begin(), sigma.end()));
    }

    auto pack = [n](const std::vector<std::uint32_t>& rows) {
        std::uint64_t key = 0;
        for (int b = 0; b < n; ++b) key |= static_cast<std::uint64_t>(rows[b]) << (b * n);
        return key;
    };

    std::set<std::uint64_t> seen;
    std::vector<Poset> out;
    std::vector<std::uint32_t> rows(n), relabeled(n);
    const std::uint64_t patterns = 1ull << slots.size();
    for (std::uint64_t pat = 0; pat < patterns; ++pat) {
        for (int b = 0; b < n; ++b) rows[b] = 1u << b;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((pat >> i) & 1ull) rows[slots[i].second] |= 1u << slots[i].first;
        if (!detail::rows_transitive(rows)) continue;
        for (const std::vector<int>& sigma : perms) {
            for (int b = 0; b < n; ++b) relabeled[b] = 0;
            for (int b = 0; b < n; ++b)
                for (int a = 0; a < n; ++a)
                    if ((rows[b] >> a) & 1u) relabeled[sigma[b]] |= 1u << sigma[a];
            if (seen.insert(pack(relabeled)).second)
                out.push_back(Poset(detail::preorder_from_rows(relabeled)));
        }
    }
    return out;
}

// Labeled topologies via the preorder correspondence: every preorder's lower
// sets, every topology's specialization preorder, bijectively.
inline std::vector<FiniteSpace> enumerate_topologies(int n, bool t0_only = false) {
    if (t0_only && n <= 5) {
        std::vector<FiniteSpace> out;
        for (const Poset& p : enumerate_posets(n)) out.push_back(space_from_preorder(p));
        return out;
    }
    std::vector<FiniteSpace> out;
    for (const Preorder& p : enumerate_preorders(n)) out.push_back(space_from_preorder(p));
    return out;
}

// Independent oracle: filter every family of subsets containing the empty
// and full sets for closure under union and intersection.
inline std::vector<FiniteSpace> enumerate_topologies_by_family_filter(int n,
                                                                      bool t0_only = false) {
    if (n < 0 || n > 4)
        throw BoundError(ErrorKind::bound_exceeded,
                         "family filter limited to 4 points, got " + std::to_string(n));
    const std::uint32_t full = (n == 0) ? 0u : ((1u << n) - 1u);
    std::vector<std::uint32_t> inner; // proper nonempty subsets
    for (std::uint32_t m = 1; m < full; ++m) inner.push_back(m);

    std::vector<FiniteSpace> out;
    const std::uint64_t families = 1ull << inner.size();
    for (std::uint64_t fam = 0; fam < families; ++fam) {
        std::vector<std::uint32_t> opens{0u};
        if (full != 0u) opens.push_back(full);
        for (std::size_t i = 0; i < inner.size(); ++i)
            if ((fam >> i) & 1ull) opens.push_back(inner[i]);
        std::uint32_t present[1 << 4] = {};
        for (std::uint32_t m : opens) present[m] = 1;
        bool closed = true;
        for (std::size_t i = 0; i < opens.size() && closed; ++i)
            for (std::size_t j = i + 1; j < opens.size(); ++j)
                if (!present[opens[i] | opens[j]] || !present[opens[i] & opens[j]]) {
                    closed = false;
                    break;
                }
        if (!closed) continue;
        FiniteSpace s = validate_topology(n, std::move(opens));
        if (!t0_only || is_t0(s)) out.push_back(std::move(s));
    }
    return out;
}

// Number of isomorphism classes in a list of preorders or posets.
template <class P>
inline long long count_unlabeled(const std::vector<P>& items) {
    std::set<CanonKey> keys;
    for (const P& p : items) keys.insert(canonical_key(p));
    return static_cast<long long>(keys.size());
}

inline long long count_unlabeled_spaces(const std::vector<FiniteSpace>& spaces) {
    std::set<CanonKey> keys;
    for (const FiniteSpace& s : spaces) keys.insert(canonical_key(specialization_preorder(s)));
    return static_cast<long long>(keys.size());
}

} // namespace fintop
