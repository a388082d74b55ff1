#include "helpers.hpp"

using namespace fintop;
using testutil::thrown_kind;

TEST_CASE("homeomorphism group equals the brute continuous bijections", "[mcg]") {
    for (int n = 0; n <= 3; ++n)
        for (const FiniteSpace& s : enumerate_topologies(n))
            CHECK(homeo_group(s).elements() == testutil::brute_homeos(s));
}

TEST_CASE("indiscrete pair next to an open point", "[mcg]") {
    const FiniteSpace s = models::pair_plus_point();
    const PermGroup h = homeo_group(s);
    const PermGroup k = kernel_subgroup(s);
    const PermGroup m = mod_group(s);
    CHECK(h.order() == 2);
    CHECK(k.order() == 2);
    CHECK(m.order() == 1);
    CHECK(h.order() == k.order() * m.order());
    CHECK(k.is_normal_in(h));

    const Theorem1Report r = theorem1_check(s);
    CHECK(r.mod_x.order() == 1);
    CHECK(r.aut_t0.order() == 2);
    CHECK_FALSE(r.isomorphic);
    REQUIRE(r.witness.has_value());
    CHECK(r.aut_t0.contains(*r.witness));
    CHECK_FALSE(r.mod_x.contains(*r.witness));
    CHECK(*r.witness == Perm{std::vector<int>{1, 0}});
}

TEST_CASE("adding an isolated point keeps the obstruction", "[mcg]") {
    const FiniteSpace s = models::add_isolated_point(models::pair_plus_point());
    CHECK(homeo_group(s).order() == 4);
    CHECK(kernel_subgroup(s).order() == 2);
    CHECK(mod_group(s).order() == 2);
    const Theorem1Report r = theorem1_check(s);
    CHECK(r.aut_t0.order() == 6); // quotient is a 3-point antichain
    CHECK_FALSE(r.isomorphic);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(r.mod_x.contains(*r.witness));
}

TEST_CASE("two indistinguishable pairs lift the quotient swap", "[mcg]") {
    const FiniteSpace s = testutil::two_indiscrete_pairs();
    const PermGroup h = homeo_group(s);
    const PermGroup k = kernel_subgroup(s);
    const PermGroup m = mod_group(s);
    CHECK(h.order() == 8);
    CHECK(k.order() == 4);
    CHECK(m.order() == 2);
    CHECK(h.order() == k.order() * m.order());
    const Theorem1Report r = theorem1_check(s);
    CHECK(r.isomorphic); // equal weights, so the class swap lifts
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("order identity, normality, and trivial class action of the kernel", "[mcg]") {
    std::vector<FiniteSpace> battery = enumerate_topologies(3);
    battery.push_back(models::add_isolated_point(models::pair_plus_point()));
    battery.push_back(testutil::two_indiscrete_pairs());
    for (const FiniteSpace& s : battery) {
        const PermGroup h = homeo_group(s);
        const PermGroup k = kernel_subgroup(s);
        const PermGroup m = mod_group(s);
        CHECK(h.order() == k.order() * m.order());
        CHECK(k.is_subgroup_of(h));
        CHECK(k.is_normal_in(h));
        const QuotientMap q = indistinguishability_classes(s);
        CHECK(induced_class_action(k, q).order() == 1);
    }
}

TEST_CASE("class-size-preserving quotient automorphisms are exactly Mod", "[mcg]") {
    std::vector<FiniteSpace> battery = enumerate_topologies(3);
    battery.push_back(models::add_isolated_point(models::pair_plus_point()));
    battery.push_back(testutil::two_indiscrete_pairs());
    for (const FiniteSpace& s : battery) {
        const auto [quotient, q] = t0_quotient(s);
        CHECK(mod_group(s) == weight_preserving_auts(quotient, q.weights));
    }
}

TEST_CASE("isotopy certificates recompose the kernel elements", "[mcg]") {
    const FiniteSpace s = testutil::two_indiscrete_pairs();
    const PermGroup k = kernel_subgroup(s);
    for (const Perm& f : k.elements()) {
        const IsotopyCertificate cert = isotopy_certificate(s, f);
        CHECK(validate_certificate(s, f, cert));
        for (std::size_t i = 0; i < cert.steps.size(); ++i)
            for (std::size_t j = i + 1; j < cert.steps.size(); ++j)
                CHECK(cert.steps[i].cls != cert.steps[j].cls);
    }
    const IsotopyCertificate idcert = isotopy_certificate(s, Perm::identity(4));
    CHECK(idcert.steps.empty());
    CHECK(validate_certificate(s, Perm::identity(4), idcert));
}

TEST_CASE("tampered or misassigned certificates are rejected", "[mcg]") {
    const FiniteSpace s = testutil::two_indiscrete_pairs();
    const Perm f{std::vector<int>{1, 0, 3, 2}};
    IsotopyCertificate cert = isotopy_certificate(s, f);
    REQUIRE(cert.steps.size() == 2);
    CHECK(validate_certificate(s, f, cert));

    IsotopyCertificate wrong_move = cert;
    wrong_move.steps[0].move = Perm::identity(4);
    CHECK_FALSE(validate_certificate(s, f, wrong_move));

    IsotopyCertificate missing_step = cert;
    missing_step.steps.pop_back();
    CHECK_FALSE(validate_certificate(s, f, missing_step));

    IsotopyCertificate out_of_class = cert;
    out_of_class.steps[0].move = Perm{std::vector<int>{2, 1, 0, 3}};
    CHECK_FALSE(validate_certificate(s, f, out_of_class));

    IsotopyCertificate wrong_degree = cert;
    wrong_degree.degree = 3;
    CHECK_FALSE(validate_certificate(s, f, wrong_degree));
}

TEST_CASE("maps leaving their class cannot be certified", "[mcg]") {
    const FiniteSpace s = testutil::two_indiscrete_pairs();
    CHECK(thrown_kind([&] {
              isotopy_certificate(s, Perm{std::vector<int>{2, 3, 0, 1}});
          }) == ErrorKind::not_in_kernel);
    CHECK(thrown_kind([&] { isotopy_certificate(s, Perm::identity(3)); }) ==
          ErrorKind::bad_input);
    CHECK(thrown_kind([] {
              isotopy_certificate(models::discrete(2), Perm{std::vector<int>{1, 0}});
          }) == ErrorKind::not_in_kernel);
}

TEST_CASE("T0 spaces have trivial kernel and full lift", "[mcg]") {
    const FiniteSpace s = order_topology(models::star(3));
    CHECK(kernel_subgroup(s).order() == 1);
    CHECK(mod_group(s).order() == 6);
    CHECK(mod_group(s) == homeo_group(s));
    const Theorem1Report r = theorem1_check(s);
    CHECK(r.isomorphic);
    CHECK(r.mod_x.order() == 6);
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("point and order bounds apply to the group computations", "[mcg]") {
    AutOptions tight;
    tight.max_points = 2;
    CHECK(thrown_kind([&] { homeo_group(models::pair_plus_point(), tight); }) ==
          ErrorKind::search_bound_exceeded);
    CHECK(thrown_kind([&] { kernel_subgroup(models::pair_plus_point(), tight); }) ==
          ErrorKind::search_bound_exceeded);
    CHECK(thrown_kind([&] { theorem1_check(models::pair_plus_point(), tight); }) ==
          ErrorKind::search_bound_exceeded);
    AutOptions low_order;
    low_order.max_order = 3;
    CHECK(thrown_kind([&] {
              kernel_subgroup(testutil::two_indiscrete_pairs(), low_order);
          }) == ErrorKind::order_bound_exceeded);
}
