#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fintop/bitset.hpp"
#include "fintop/error.hpp"
#include "fintop/poset_invariants.hpp"
#include "fintop/preorder.hpp"

namespace fintop {

// Nonempty faces stored explicitly, each sorted, the list ordered by
// dimension then lexicographically.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Validates subset closure and that every vertex lies in some face.
    static SimplicialComplex from_faces(int vertex_count,
                                        std::vector<std::vector<int>> faces) {
        SimplicialComplex k = assemble(vertex_count, std::move(faces));
        for (const std::vector<int>& f : k.faces_)
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                if (f.size() == 1) continue;
                std::vector<int> sub;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub.push_back(f[i]);
                if (!k.has_face(sub))
                    throw ValidationError(ErrorKind::bad_input,
                                          "face list is not closed under subsets");
            }
        return k;
    }

    // Generates the closure of the given faces.
    static SimplicialComplex from_maximal(int vertex_count,
                                          const std::vector<std::vector<int>>& maximal) {
        std::vector<std::vector<int>> faces;
        for (std::vector<int> f : maximal) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            const std::size_t m = f.size();
            for (std::size_t mask = 1; mask < (1ull << m); ++mask) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask & (1ull << i)) sub.push_back(f[i]);
                faces.push_back(std::move(sub));
            }
        }
        return assemble(vertex_count, std::move(faces));
    }

    int vertex_count() const { return vertex_count_; }
    int dim() const { return dim_; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }

    bool has_face(const std::vector<int>& f) const {
        return std::binary_search(faces_.begin(), faces_.end(), f, face_less);
    }

    int face_index(const std::vector<int>& f) const {
        auto it = std::lower_bound(faces_.begin(), faces_.end(), f, face_less);
        if (it == faces_.end() || *it != f) return -1;
        return static_cast<int>(it - faces_.begin());
    }

    // Face counts by dimension, length dim()+1.
    std::vector<long long> face_counts() const {
        std::vector<long long> c(dim_ + 1, 0);
        for (const std::vector<int>& f : faces_) ++c[f.size() - 1];
        return c;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    static bool face_less(const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }

    static SimplicialComplex assemble(int vertex_count,
                                      std::vector<std::vector<int>> faces) {
        if (vertex_count < 0)
            throw ValidationError(ErrorKind::bad_input, "negative vertex count");
        for (std::vector<int>& f : faces) {
            if (f.empty())
                throw ValidationError(ErrorKind::bad_input, "empty face");
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw ValidationError(ErrorKind::bad_input, "repeated vertex in a face");
            if (f.front() < 0 || f.back() >= vertex_count)
                throw ValidationError(ErrorKind::bad_input, "face vertex out of range");
        }
        std::sort(faces.begin(), faces.end(), face_less);
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        std::vector<char> seen(vertex_count, 0);
        for (const std::vector<int>& f : faces)
            for (int v : f) seen[v] = 1;
        for (int v = 0; v < vertex_count; ++v)
            if (!seen[v])
                throw ValidationError(ErrorKind::bad_input,
                                      "vertex " + std::to_string(v) + " lies in no face");
        SimplicialComplex k;
        k.vertex_count_ = vertex_count;
        k.faces_ = std::move(faces);
        k.dim_ = 0;
        for (const std::vector<int>& f : k.faces_)
            k.dim_ = std::max(k.dim_, static_cast<int>(f.size()) - 1);
        return k;
    }

    int vertex_count_ = 0;
    int dim_ = 0;
    std::vector<std::vector<int>> faces_;
};

// Faces are the nonempty chains of the poset.
inline SimplicialComplex order_complex(const Poset& p) {
    return SimplicialComplex::from_faces(p.n(), all_chains(p));
}

// Nonempty faces ordered by inclusion. Element order matches the face order
// of the complex.
inline Poset face_poset(const SimplicialComplex& k) {
    const auto& faces = k.faces();
    const int m = static_cast<int>(faces.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j || faces[i].size() >= faces[j].size()) continue;
            if (std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(),
                              faces[i].end()))
                pairs.push_back({i, j});
        }
    return Poset::closure_of_pairs(m, pairs);
}

inline long long euler_characteristic(const SimplicialComplex& k) {
    long long chi = 0;
    int d = 0;
    for (long long c : k.face_counts()) chi += (d++ % 2 == 0) ? c : -c;
    return chi;
}

struct BettiOptions {
    int max_dim = 4;
    long long max_faces = 200000;
};

namespace detail {

// Rank of a GF(2) matrix given as column bitsets.
inline long long gf2_rank(std::vector<Bitset> cols) {
    long long rank = 0;
    std::size_t col = 0;
    const int rows = cols.empty() ? 0 : cols[0].size();
    for (int r = 0; r < rows && col < cols.size(); ++r) {
        std::size_t pivot = col;
        while (pivot < cols.size() && !cols[pivot].test(r)) ++pivot;
        if (pivot == cols.size()) continue;
        std::swap(cols[col], cols[pivot]);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != col && cols[j].test(r)) cols[j] ^= cols[col];
        ++col;
        ++rank;
    }
    return rank;
}

} // namespace detail

// Mod-2 Betti numbers b_0..b_dim via boundary-matrix ranks:
// b_k = (#k-faces) - rank d_k - rank d_{k+1}.
inline std::vector<long long> betti_gf2(const SimplicialComplex& k,
                                        const BettiOptions& opt = {}) {
    if (k.dim() > opt.max_dim)
        throw BoundError(ErrorKind::bound_exceeded,
                         "homology limited to dimension " + std::to_string(opt.max_dim) +
                             ", complex has " + std::to_string(k.dim()));
    if (static_cast<long long>(k.faces().size()) > opt.max_faces)
        throw BoundError(ErrorKind::bound_exceeded,
                         "homology limited to " + std::to_string(opt.max_faces) +
                             " faces");
    const std::vector<long long> counts = k.face_counts();
    // faces grouped by dimension, indexed consecutively within each group
    std::vector<std::vector<const std::vector<int>*>> by_dim(k.dim() + 1);
    std::vector<std::map<std::vector<int>, int>> pos(k.dim() + 1);
    for (const std::vector<int>& f : k.faces()) {
        const int d = static_cast<int>(f.size()) - 1;
        pos[d][f] = static_cast<int>(by_dim[d].size());
        by_dim[d].push_back(&f);
    }
    std::vector<long long> rank(k.dim() + 2, 0); // rank[d] = rank of d_d, d_0 = 0
    for (int d = 1; d <= k.dim(); ++d) {
        std::vector<Bitset> cols;
        cols.reserve(by_dim[d].size());
        for (const std::vector<int>* f : by_dim[d]) {
            Bitset col(static_cast<int>(by_dim[d - 1].size()));
            for (std::size_t drop = 0; drop < f->size(); ++drop) {
                std::vector<int> facet;
                for (std::size_t i = 0; i < f->size(); ++i)
                    if (i != drop) facet.push_back((*f)[i]);
                col.set(pos[d - 1].at(facet));
            }
            cols.push_back(std::move(col));
        }
        rank[d] = detail::gf2_rank(std::move(cols));
    }
    std::vector<long long> betti(k.dim() + 1);
    for (int d = 0; d <= k.dim(); ++d) betti[d] = counts[d] - rank[d] - rank[d + 1];
    return betti;
}

} // namespace fintop
