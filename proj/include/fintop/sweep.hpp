#pragma once

#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fintop/aut.hpp"
#include "fintop/enumerate.hpp"
#include "fintop/error.hpp"
#include "fintop/mcg.hpp"
#include "fintop/space.hpp"

namespace fintop {

struct SweepReport {
    int n = 0;
    long long total_spaces = 0;
    long long t0_count = 0;
    long long iso_holds = 0;
    long long iso_fails = 0;
    std::vector<std::pair<FiniteSpace, Theorem1Report>> fail_witnesses;
};

namespace detail {

struct SweepCell {
    bool t0 = false;
    bool isomorphic = false;
    Theorem1Report report;
};

// Checks one space and everything claimed unconditionally about it: the
// order identity |Homeo| = |K|*|Mod|, normality of K, certificates for all
// of K, and the containment of Mod in Aut of the quotient.
inline SweepCell sweep_one(const FiniteSpace& s) {
    const Preorder pre = specialization_preorder(s);
    const auto [quotient, q] = t0_quotient(pre);
    const PermGroup h = automorphism_group(pre);
    const PermGroup k = kernel_subgroup(s);
    const PermGroup m = induced_class_action(h, q);
    const PermGroup a = automorphism_group(quotient);

    if (h.order() != k.order() * m.order())
        throw Error(ErrorKind::verification_failed,
                    "order identity fails: " + std::to_string(h.order()) + " != " +
                        std::to_string(k.order()) + " * " + std::to_string(m.order()));
    if (!k.is_normal_in(h))
        throw Error(ErrorKind::verification_failed, "kernel is not normal");
    if (!m.is_subgroup_of(a))
        throw Error(ErrorKind::verification_failed,
                    "class action escapes Aut of the quotient");
    for (const Perm& f : k.elements())
        if (!validate_certificate(s, f, isotopy_certificate(s, f)))
            throw Error(ErrorKind::verification_failed,
                        "isotopy certificate fails to validate");

    SweepCell cell;
    cell.t0 = pre.is_antisymmetric();
    cell.isomorphic = m.order() == a.order();
    if (cell.t0 && !cell.isomorphic)
        throw Error(ErrorKind::verification_failed,
                    "a T0 space reports a proper subgroup");
    cell.report.mod_x = m;
    cell.report.aut_t0 = a;
    cell.report.isomorphic = cell.isomorphic;
    if (!cell.isomorphic)
        for (const Perm& f : a.elements())
            if (!m.contains(f)) {
                cell.report.witness = f;
                break;
            }
    return cell;
}

} // namespace detail

// Runs the comparison over every labeled topology on n points. The report is
// identical for every worker count: cells are computed independently and
// merged in enumeration order.
inline SweepReport sweep_theorem1(int n, int witness_cap = 10, int jobs = 1) {
    if (n < 0 || n > 4)
        throw BoundError(ErrorKind::bound_exceeded,
                         "sweep limited to 4 points, got " + std::to_string(n));
    if (jobs < 1) jobs = 1;
    const std::vector<FiniteSpace> spaces = enumerate_topologies(n);
    std::vector<detail::SweepCell> cells(spaces.size());

    if (jobs == 1) {
        for (std::size_t i = 0; i < spaces.size(); ++i)
            cells[i] = detail::sweep_one(spaces[i]);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(jobs);
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w]() {
                try {
                    for (std::size_t i = w; i < spaces.size(); i += jobs)
                        cells[i] = detail::sweep_one(spaces[i]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (std::thread& t : workers) t.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }

    SweepReport r;
    r.n = n;
    r.total_spaces = static_cast<long long>(spaces.size());
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        if (cells[i].t0) ++r.t0_count;
        if (cells[i].isomorphic) {
            ++r.iso_holds;
        } else {
            ++r.iso_fails;
            if (static_cast<int>(r.fail_witnesses.size()) < witness_cap)
                r.fail_witnesses.push_back({spaces[i], cells[i].report});
        }
    }
    return r;
}

} // namespace fintop
