#include "helpers.hpp"

using namespace fintop;
using testutil::load_fixture;
using testutil::thrown_kind;

namespace {

const std::vector<std::string> space_fixtures{
    "sierpinski.json", "indiscrete2.json", "discrete3.json",
    "c3.json",         "c3_plus_point.json"};

const std::vector<std::string> poset_fixtures{
    "chain3.json", "star3.json", "star4.json", "circle4.json", "sphere6.json"};

const std::vector<std::string> group_fixtures{"cyclic3.json", "klein4.json",
                                              "c6.json", "s3.json", "s3_perm.json"};

} // namespace

TEST_CASE("space files parse and round-trip", "[io]") {
    for (const std::string& name : space_fixtures) {
        const LabeledSpace ls = parse_space(load_fixture(name));
        const LabeledSpace again = parse_space(space_to_json(ls));
        CHECK(again.points == ls.points);
        CHECK(again.space == ls.space);
    }
    const LabeledSpace c3 = parse_space(load_fixture("c3.json"));
    CHECK(c3.points == std::vector<std::string>{"a", "b", "c"});
    CHECK(c3.space == models::pair_plus_point());
    CHECK(parse_space(load_fixture("c3_plus_point.json")).space ==
          models::add_isolated_point(models::pair_plus_point()));
    CHECK(parse_space(load_fixture("sierpinski.json")).space == models::sierpinski());
}

TEST_CASE("poset files parse, close transitively, and round-trip", "[io]") {
    for (const std::string& name : poset_fixtures) {
        const LabeledPoset lp = parse_poset(load_fixture(name));
        const LabeledPoset again = parse_poset(poset_to_json(lp));
        CHECK(again.elements == lp.elements);
        CHECK(again.poset == lp.poset);
    }
    const LabeledPoset chain = parse_poset(load_fixture("chain3.json"));
    CHECK(chain.poset == models::chain(3));
    CHECK(chain.poset.leq(0, 2)); // closure supplies the long relation
    CHECK(parse_poset(load_fixture("circle4.json")).poset == models::circle4());
    CHECK(parse_poset(load_fixture("sphere6.json")).poset == models::sphere6());
    CHECK(parse_poset(load_fixture("star4.json")).poset == models::star(4));
}

TEST_CASE("printed posets list exactly the cover relations", "[io]") {
    const LabeledPoset chain = parse_poset(load_fixture("chain3.json"));
    const nlohmann::json j = poset_to_json(chain);
    const nlohmann::json expected =
        nlohmann::json::array({{"bottom", "middle"}, {"middle", "top"}});
    CHECK(j["relations"] == expected);
    // the transitive pair bottom < top is not printed
    CHECK(j["relations"].size() == 2);
}

TEST_CASE("group files parse in both forms", "[io]") {
    const GroupSpec c3 = parse_group(load_fixture("cyclic3.json"));
    CHECK(c3.order == 3);
    CHECK(c3.generator_list() == std::vector<int>{1, 2});

    const GroupSpec k4 = parse_group(load_fixture("klein4.json"));
    CHECK(k4.order == 4);

    const GroupSpec s3 = parse_group(load_fixture("s3.json"));
    CHECK(s3.order == 6);
    CHECK(s3.generators == std::vector<int>{1, 4});

    const GroupSpec s3p = parse_group(load_fixture("s3_perm.json"));
    CHECK(s3p.order == 6);
    CHECK_FALSE(s3p.generators.empty());
    CHECK(group_iso(s3p.regular_representation(), s3.regular_representation()));
    CHECK_FALSE(group_iso(parse_group(load_fixture("c6.json")).regular_representation(),
                          s3.regular_representation()));
}

TEST_CASE("malformed inputs are rejected with the right kinds", "[io]") {
    CHECK(thrown_kind([] { parse_space(load_fixture("broken_opens.json")); }) ==
          ErrorKind::missing_empty_or_full);
    CHECK(thrown_kind([] {
              parse_space({{"points", {"a", "a"}}, {"opens", nlohmann::json::array()}});
          }) == ErrorKind::bad_input);
    CHECK(thrown_kind([] {
              parse_space({{"points", {"a"}}, {"opens", {{"zzz"}}}});
          }) == ErrorKind::bad_input);
    CHECK(thrown_kind([] { parse_space({{"points", {"a"}}}); }) == ErrorKind::bad_input);
    CHECK(thrown_kind([] {
              parse_poset({{"elements", {"a", "b"}}, {"relations", {{"a"}}}});
          }) == ErrorKind::bad_input);
    // a relation cycle violates antisymmetry
    CHECK(thrown_kind([] {
              parse_poset({{"elements", {"a", "b"}},
                           {"relations",
                            nlohmann::json::array({{"a", "b"}, {"b", "a"}})}});
          }) == ErrorKind::bad_input);
    CHECK(thrown_kind([] {
              parse_group({{"order", 5}, {"table", {{0, 1}, {1, 0}}}});
          }) == ErrorKind::bad_input);
    CHECK(thrown_kind([] { parse_group({{"table", {{0, 1}, {1, 1}}}}); }) ==
          ErrorKind::not_a_group);
    CHECK(thrown_kind([] {
              parse_group({{"degree", 2}, {"generators", {{1, 0, 2}}}});
          }) == ErrorKind::bad_input);
    CHECK(thrown_kind([] { parse_group({{"foo", 1}}); }) == ErrorKind::bad_input);
}

TEST_CASE("input kinds are detected from the fields", "[io]") {
    CHECK(input_kind(load_fixture("c3.json")) == InputKind::space);
    CHECK(input_kind(load_fixture("chain3.json")) == InputKind::poset);
    CHECK(input_kind(load_fixture("cyclic3.json")) == InputKind::group);
    CHECK(input_kind(load_fixture("s3_perm.json")) == InputKind::group);
    CHECK(thrown_kind([] { input_kind({{"foo", 1}}); }) == ErrorKind::bad_input);
}

TEST_CASE("numbered names", "[io]") {
    CHECK(numbered_names(3) == std::vector<std::string>{"0", "1", "2"});
    CHECK(numbered_names(2, "v") == std::vector<std::string>{"v0", "v1"});
    CHECK(numbered_names(0).empty());
}

TEST_CASE("every fixture parses as its declared kind", "[io]") {
    for (const std::string& name : space_fixtures)
        CHECK(input_kind(load_fixture(name)) == InputKind::space);
    for (const std::string& name : poset_fixtures)
        CHECK(input_kind(load_fixture(name)) == InputKind::poset);
    for (const std::string& name : group_fixtures)
        CHECK(input_kind(load_fixture(name)) == InputKind::group);
}
