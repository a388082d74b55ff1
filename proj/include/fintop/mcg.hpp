#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fintop/aut.hpp"
#include "fintop/error.hpp"
#include "fintop/group.hpp"
#include "fintop/perm.hpp"
#include "fintop/preorder.hpp"
#include "fintop/space.hpp"

namespace fintop {

// Homeomorphisms of a finite space are exactly the automorphisms of its
// specialization preorder.
inline PermGroup homeo_group(const FiniteSpace& s, const AutOptions& opt = {}) {
    return automorphism_group(specialization_preorder(s), opt);
}

// The kernel K: permutations moving each point only within its
// indistinguishability class, i.e. the direct product of symmetric groups on
// the classes. Every element is checked order-preserving before it is kept.
inline PermGroup kernel_subgroup(const FiniteSpace& s, const AutOptions& opt = {}) {
    const int n = s.n();
    if (n > opt.max_points)
        throw BoundError(ErrorKind::search_bound_exceeded,
                         "kernel computation limited to " +
                             std::to_string(opt.max_points) + " points");
    const Preorder pre = specialization_preorder(s);
    const QuotientMap q = indistinguishability_classes(pre);

    long long order = 1;
    for (int w : q.weights)
        for (int i = 2; i <= w; ++i) {
            order *= i;
            if (order > opt.max_order)
                throw BoundError(ErrorKind::order_bound_exceeded,
                                 "kernel order exceeds bound " +
                                     std::to_string(opt.max_order));
        }

    std::vector<Perm> elems;
    std::vector<int> image(n);
    auto emit = [&]() {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (pre.leq(a, b) && !pre.leq(image[a], image[b]))
                    throw std::logic_error("kernel element is not order preserving");
        elems.push_back(Perm(image));
    };
    auto rec = [&](auto&& self, std::size_t ci) -> void {
        if (ci == q.classes.size()) {
            emit();
            return;
        }
        const std::vector<int>& cls = q.classes[ci];
        std::vector<int> arranged = cls;
        do {
            for (std::size_t j = 0; j < cls.size(); ++j) image[cls[j]] = arranged[j];
            self(self, ci + 1);
        } while (std::next_permutation(arranged.begin(), arranged.end()));
    };
    rec(rec, 0);
    return PermGroup::from_elements(n, std::move(elems));
}

// Image of a point-level group on the indistinguishability classes.
inline PermGroup induced_class_action(const PermGroup& g, const QuotientMap& q) {
    const int m = static_cast<int>(q.classes.size());
    std::vector<Perm> images;
    for (const Perm& h : g.elements()) {
        std::vector<int> img(m);
        for (int c = 0; c < m; ++c) img[c] = q.class_of[h[q.classes[c][0]]];
        images.push_back(Perm(std::move(img)));
    }
    return PermGroup::from_elements(m, std::move(images));
}

// Mod(X): the image of Homeo(X) on T0 classes. Satisfies
// |Homeo(X)| = |K| * |Mod(X)|.
inline PermGroup mod_group(const FiniteSpace& s, const AutOptions& opt = {}) {
    const PermGroup h = homeo_group(s, opt);
    return induced_class_action(h, indistinguishability_classes(s));
}

// Same group by the dual route: automorphisms of the weighted quotient poset
// that preserve the class sizes. Used as a cross-check.
inline PermGroup weight_preserving_auts(const Poset& quotient,
                                        const std::vector<int>& weights,
                                        const AutOptions& opt = {}) {
    const PermGroup a = automorphism_group(quotient, opt);
    std::vector<Perm> kept;
    for (const Perm& f : a.elements()) {
        bool ok = true;
        for (int c = 0; c < quotient.n(); ++c)
            if (weights[f[c]] != weights[c]) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(f);
    }
    return PermGroup::from_elements(quotient.n(), std::move(kept));
}

// One elementary move: a permutation supported inside a single
// indistinguishability class. Such a move deforms to the identity through
// maps that are the identity off the class.
struct IsotopyStep {
    std::vector<int> cls; // the class, ascending
    Perm move;            // full-degree, identity outside cls
};

struct IsotopyCertificate {
    int degree = 0;
    std::vector<IsotopyStep> steps; // disjoint supports, composition = target
};

inline IsotopyCertificate isotopy_certificate(const FiniteSpace& s, const Perm& f) {
    const int n = s.n();
    if (f.degree() != n)
        throw ValidationError(ErrorKind::bad_input, "map degree does not match space");
    const QuotientMap q = indistinguishability_classes(s);
    for (int x = 0; x < n; ++x)
        if (q.class_of[f[x]] != q.class_of[x])
            throw Error(ErrorKind::not_in_kernel,
                        "map sends point " + std::to_string(x) +
                            " outside its indistinguishability class");
    IsotopyCertificate cert;
    cert.degree = n;
    for (const std::vector<int>& cls : q.classes) {
        bool moves = false;
        for (int x : cls)
            if (f[x] != x) moves = true;
        if (!moves) continue;
        std::vector<int> img(n);
        for (int x = 0; x < n; ++x) img[x] = x;
        for (int x : cls) img[x] = f[x];
        cert.steps.push_back({cls, Perm(std::move(img))});
    }
    return cert;
}

// Recomposes the steps and checks the claims: each step is supported in one
// indistinguishability class and the composite equals f.
inline bool validate_certificate(const FiniteSpace& s, const Perm& f,
                                 const IsotopyCertificate& cert) {
    const int n = s.n();
    if (cert.degree != n || f.degree() != n) return false;
    const QuotientMap q = indistinguishability_classes(s);
    Perm composite = Perm::identity(n);
    for (const IsotopyStep& st : cert.steps) {
        if (st.move.degree() != n) return false;
        for (int x = 0; x < n; ++x) {
            const bool in_cls = std::binary_search(st.cls.begin(), st.cls.end(), x);
            if (!in_cls && st.move[x] != x) return false;
            if (in_cls && q.class_of[x] != q.class_of[st.cls[0]]) return false;
            if (in_cls && q.class_of[st.move[x]] != q.class_of[x]) return false;
        }
        composite = compose(st.move, composite);
    }
    return composite == f;
}

struct Theorem1Report {
    PermGroup mod_x;   // on T0 classes
    PermGroup aut_t0;  // automorphisms of the quotient poset
    bool isomorphic = false;
    std::optional<Perm> witness; // quotient automorphism induced by no homeomorphism
};

// Compares Mod(X) with the full automorphism group of the T0 quotient.
// Mod(X) is always a subgroup; equality can fail when class sizes obstruct
// the lift, and a witness automorphism is then reported.
inline Theorem1Report theorem1_check(const FiniteSpace& s, const AutOptions& opt = {}) {
    const Preorder pre = specialization_preorder(s);
    const auto [quotient, q] = t0_quotient(pre);
    Theorem1Report r;
    r.mod_x = induced_class_action(automorphism_group(pre, opt), q);
    r.aut_t0 = automorphism_group(quotient, opt);
    if (!r.mod_x.is_subgroup_of(r.aut_t0))
        throw std::logic_error("induced class action escapes Aut of the quotient");
    r.isomorphic = r.mod_x.order() == r.aut_t0.order();
    if (!r.isomorphic) {
        // An unrealized automorphism always fails weight preservation: any
        // automorphism matching all class sizes lifts classwise to a
        // homeomorphism.
        for (const Perm& f : r.aut_t0.elements())
            if (!r.mod_x.contains(f)) {
                r.witness = f;
                break;
            }
    }
    return r;
}

} // namespace fintop
