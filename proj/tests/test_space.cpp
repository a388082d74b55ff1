#include "helpers.hpp"

using namespace fintop;
using testutil::thrown_kind;

TEST_CASE("topology axioms are enforced", "[space]") {
    CHECK(thrown_kind([] { validate_topology(2, {0u, 1u}); }) ==
          ErrorKind::missing_empty_or_full);
    CHECK(thrown_kind([] { validate_topology(2, {1u, 3u}); }) ==
          ErrorKind::missing_empty_or_full);
    CHECK(thrown_kind([] { validate_topology(3, {0u, 0b001u, 0b010u, 0b111u}); }) ==
          ErrorKind::not_closed_under_union);
    CHECK(thrown_kind([] { validate_topology(3, {0u, 0b011u, 0b110u, 0b111u}); }) ==
          ErrorKind::not_closed_under_intersection);
    CHECK(thrown_kind([] { validate_topology(2, {0u, 0b100u, 0b011u}); }) ==
          ErrorKind::bad_input);
    CHECK(thrown_kind([] { validate_topology(17, {0u}); }) == ErrorKind::bad_input);
    CHECK(thrown_kind([] { validate_topology(-1, {0u}); }) == ErrorKind::bad_input);
}

TEST_CASE("opens are stored sorted and deduplicated", "[space]") {
    const FiniteSpace s = validate_topology(2, {3u, 0u, 3u, 1u, 0u});
    CHECK(s.opens() == std::vector<std::uint32_t>{0u, 1u, 3u});
    CHECK(s.is_open(1u));
    CHECK_FALSE(s.is_open(2u));
    CHECK(s == models::sierpinski());
}

TEST_CASE("minimal open sets generate the specialization preorder", "[space]") {
    const FiniteSpace s = models::sierpinski();
    CHECK(s.min_open(0) == 0b01u);
    CHECK(s.min_open(1) == 0b11u);
    const Preorder p = specialization_preorder(s);
    CHECK(p.leq(0, 1));
    CHECK_FALSE(p.leq(1, 0));

    const Preorder d = specialization_preorder(models::discrete(3));
    const Preorder i = specialization_preorder(models::indiscrete(3));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            CHECK(d.leq(a, b) == (a == b));
            CHECK(i.leq(a, b));
        }
}

TEST_CASE("opens are exactly the lower sets", "[space]") {
    for (const FiniteSpace& s : enumerate_topologies(3)) {
        const Preorder p = specialization_preorder(s);
        const std::uint32_t full = s.full_mask();
        for (std::uint32_t m = 0; m <= full; ++m) {
            bool lower = true;
            for (int y = 0; lower && y < s.n(); ++y)
                if ((m >> y) & 1u)
                    for (int x = 0; x < s.n(); ++x)
                        if (p.leq(x, y) && !((m >> x) & 1u)) lower = false;
            CHECK(s.is_open(m) == lower);
        }
    }
}

TEST_CASE("space and preorder round-trip through each other", "[space]") {
    for (int n = 0; n <= 3; ++n) {
        for (const FiniteSpace& s : enumerate_topologies(n))
            CHECK(space_from_preorder(specialization_preorder(s)) == s);
        for (const Preorder& p : enumerate_preorders(n))
            CHECK(specialization_preorder(space_from_preorder(p)) == p);
    }
}

TEST_CASE("order topology of a chain is the nested family", "[space]") {
    const FiniteSpace s = order_topology(models::chain(3));
    CHECK(s.opens() == std::vector<std::uint32_t>{0b000u, 0b001u, 0b011u, 0b111u});
}

TEST_CASE("continuity of a self-map is order preservation", "[space]") {
    for (int n = 1; n <= 3; ++n)
        for (const FiniteSpace& s : enumerate_topologies(n)) {
            const Preorder p = specialization_preorder(s);
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            do {
                const Perm f{img};
                bool preserves = true;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (p.leq(a, b) && !p.leq(f[a], f[b])) preserves = false;
                CHECK(is_continuous(f, s, s) == preserves);
                // a continuous bijection of a finite space to itself is open
                if (preserves) CHECK(is_continuous(f.inverse(), s, s));
            } while (std::next_permutation(img.begin(), img.end()));
        }
}

TEST_CASE("indistinguishability classes and T0 quotient", "[space]") {
    const FiniteSpace s = models::pair_plus_point();
    const auto [quotient, q] = t0_quotient(s);
    REQUIRE(q.classes.size() == 2);
    CHECK(q.classes[0] == std::vector<int>{0, 1});
    CHECK(q.classes[1] == std::vector<int>{2});
    CHECK(q.weights == std::vector<int>{2, 1});
    CHECK(q.class_of == std::vector<int>{0, 0, 1});
    CHECK_FALSE(quotient.leq(0, 1));
    CHECK_FALSE(quotient.leq(1, 0));

    CHECK_FALSE(is_t0(s));
    CHECK(is_t0(models::discrete(3)));
    CHECK(is_t0(models::sierpinski()));
    CHECK_FALSE(is_t0(models::indiscrete(2)));
}

TEST_CASE("quotient of a T0 space is a relabeling of itself", "[space]") {
    for (const FiniteSpace& s : enumerate_topologies(3, true)) {
        const auto [quotient, q] = t0_quotient(s);
        CHECK(quotient.n() == s.n());
        for (int c = 0; c < quotient.n(); ++c) CHECK(q.weights[c] == 1);
        CHECK(Poset(specialization_preorder(s)) == quotient);
    }
}

TEST_CASE("isolated point extends the open family", "[space]") {
    const FiniteSpace s = models::add_isolated_point(models::pair_plus_point());
    CHECK(s.n() == 4);
    CHECK(s.opens().size() == 8);
    const Preorder p = specialization_preorder(s);
    for (int a = 0; a < 3; ++a) {
        CHECK_FALSE(p.leq(a, 3));
        CHECK_FALSE(p.leq(3, a));
    }
}
