#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "fintop/error.hpp"

namespace fintop {

// A permutation of {0..n-1}, stored as the image vector.
// Composition convention everywhere: compose(f, g)(x) = f(g(x)).
class Perm {
public:
    Perm() = default;

    explicit Perm(int degree) : img_(degree) {
        std::iota(img_.begin(), img_.end(), 0);
    }

    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        const int n = static_cast<int>(img_.size());
        std::vector<char> seen(n, 0);
        for (int v : img_) {
            if (v < 0 || v >= n || seen[v])
                throw ValidationError(ErrorKind::bad_input, "not a permutation");
            seen[v] = 1;
        }
    }

    static Perm identity(int degree) { return Perm(degree); }

    int degree() const { return static_cast<int>(img_.size()); }

    int operator[](int x) const { return img_[x]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Perm inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
        Perm p;
        p.img_ = std::move(inv);
        return p;
    }

    const std::vector<int>& images() const { return img_; }

    // Nontrivial cycles, each starting at its smallest element, sorted by that element.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<char> done(img_.size(), 0);
        for (int i = 0; i < degree(); ++i) {
            if (done[i] || img_[i] == i) continue;
            std::vector<int> cyc;
            for (int j = i; !done[j]; j = img_[j]) {
                done[j] = 1;
                cyc.push_back(j);
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    friend Perm compose(const Perm& f, const Perm& g) {
        std::vector<int> h(f.img_.size());
        for (int x = 0; x < f.degree(); ++x) h[x] = f.img_[g.img_[x]];
        Perm p;
        p.img_ = std::move(h);
        return p;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

private:
    std::vector<int> img_;
};

// Order of the permutation as a group element (lcm of cycle lengths).
inline long long perm_element_order(const Perm& p) {
    long long ord = 1;
    for (const auto& cyc : p.cycles())
        ord = std::lcm(ord, static_cast<long long>(cyc.size()));
    return ord;
}

} // namespace fintop
