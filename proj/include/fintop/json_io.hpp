#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fintop/error.hpp"
#include "fintop/perm.hpp"
#include "fintop/poset_invariants.hpp"
#include "fintop/preorder.hpp"
#include "fintop/realize.hpp"
#include "fintop/space.hpp"

namespace fintop {

struct LabeledSpace {
    std::vector<std::string> points;
    FiniteSpace space;
};

struct LabeledPoset {
    std::vector<std::string> elements;
    Poset poset;
};

namespace detail {

inline std::vector<std::string> parse_names(const nlohmann::json& arr,
                                            const char* what) {
    if (!arr.is_array())
        throw ValidationError(ErrorKind::bad_input,
                              std::string(what) + " must be an array of strings");
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto& e : arr) {
        if (!e.is_string())
            throw ValidationError(ErrorKind::bad_input,
                                  std::string(what) + " entries must be strings");
        const std::string s = e.get<std::string>();
        if (!seen.insert(s).second)
            throw ValidationError(ErrorKind::bad_input, "duplicate name \"" + s + "\"");
        names.push_back(s);
    }
    return names;
}

inline int name_index(const std::vector<std::string>& names, const std::string& s) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == s) return static_cast<int>(i);
    throw ValidationError(ErrorKind::bad_input, "unknown name \"" + s + "\"");
}

} // namespace detail

// { "points": ["a", ...], "opens": [["a"], ...] }
inline LabeledSpace parse_space(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("opens"))
        throw ValidationError(ErrorKind::bad_input,
                              "space needs \"points\" and \"opens\"");
    LabeledSpace ls;
    ls.points = detail::parse_names(j["points"], "points");
    if (static_cast<int>(ls.points.size()) > FiniteSpace::max_points)
        throw ValidationError(ErrorKind::bad_input,
                              "at most " + std::to_string(FiniteSpace::max_points) +
                                  " points supported");
    if (!j["opens"].is_array())
        throw ValidationError(ErrorKind::bad_input, "opens must be an array");
    std::vector<std::uint32_t> opens;
    for (const auto& open : j["opens"]) {
        if (!open.is_array())
            throw ValidationError(ErrorKind::bad_input, "each open must be an array");
        std::uint32_t mask = 0;
        for (const auto& e : open) {
            if (!e.is_string())
                throw ValidationError(ErrorKind::bad_input,
                                      "open set entries must be strings");
            mask |= 1u << detail::name_index(ls.points, e.get<std::string>());
        }
        opens.push_back(mask);
    }
    ls.space = validate_topology(static_cast<int>(ls.points.size()), std::move(opens));
    return ls;
}

inline nlohmann::json space_to_json(const LabeledSpace& ls) {
    nlohmann::json j;
    j["points"] = ls.points;
    nlohmann::json opens = nlohmann::json::array();
    for (std::uint32_t m : ls.space.opens()) {
        nlohmann::json open = nlohmann::json::array();
        for (int x = 0; x < ls.space.n(); ++x)
            if ((m >> x) & 1u) open.push_back(ls.points[x]);
        opens.push_back(std::move(open));
    }
    j["opens"] = std::move(opens);
    return j;
}

// { "elements": ["a", ...], "relations": [["a","b"], ...] }; relations are
// any generating set for the order, closed transitively on load.
inline LabeledPoset parse_poset(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("relations"))
        throw ValidationError(ErrorKind::bad_input,
                              "poset needs \"elements\" and \"relations\"");
    LabeledPoset lp;
    lp.elements = detail::parse_names(j["elements"], "elements");
    if (!j["relations"].is_array())
        throw ValidationError(ErrorKind::bad_input, "relations must be an array");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& rel : j["relations"]) {
        if (!rel.is_array() || rel.size() != 2 || !rel[0].is_string() ||
            !rel[1].is_string())
            throw ValidationError(ErrorKind::bad_input,
                                  "each relation must be a pair of names");
        pairs.push_back({detail::name_index(lp.elements, rel[0].get<std::string>()),
                         detail::name_index(lp.elements, rel[1].get<std::string>())});
    }
    lp.poset =
        Poset::closure_of_pairs(static_cast<int>(lp.elements.size()), pairs);
    return lp;
}

// Printed relations are the covers; the full order is their closure.
inline nlohmann::json poset_to_json(const LabeledPoset& lp) {
    nlohmann::json j;
    j["elements"] = lp.elements;
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& [b, a] : cover_relations(lp.poset))
        rels.push_back({lp.elements[b], lp.elements[a]});
    j["relations"] = std::move(rels);
    return j;
}

// { "order": k, "table": [[...]] } with optional "generators": [indices],
// or { "degree": d, "generators": [[images], ...] }.
inline GroupSpec parse_group(const nlohmann::json& j, long long max_order = 1000) {
    if (!j.is_object())
        throw ValidationError(ErrorKind::bad_input, "group must be an object");
    if (j.contains("table")) {
        if (!j["table"].is_array())
            throw ValidationError(ErrorKind::bad_input, "table must be an array");
        std::vector<std::vector<int>> table;
        for (const auto& row : j["table"]) {
            if (!row.is_array())
                throw ValidationError(ErrorKind::bad_input, "table rows must be arrays");
            table.push_back(row.get<std::vector<int>>());
        }
        if (j.contains("order") &&
            j["order"].get<long long>() != static_cast<long long>(table.size()))
            throw ValidationError(ErrorKind::bad_input,
                                  "order does not match table size");
        std::vector<int> gens;
        if (j.contains("generators")) gens = j["generators"].get<std::vector<int>>();
        return GroupSpec::from_table(std::move(table), std::move(gens));
    }
    if (j.contains("degree") && j.contains("generators")) {
        const int degree = j["degree"].get<int>();
        if (degree < 0)
            throw ValidationError(ErrorKind::bad_input, "negative degree");
        std::vector<Perm> gens;
        for (const auto& g : j["generators"]) {
            if (!g.is_array())
                throw ValidationError(ErrorKind::bad_input,
                                      "generators must be image arrays");
            std::vector<int> img = g.get<std::vector<int>>();
            if (static_cast<int>(img.size()) != degree)
                throw ValidationError(ErrorKind::bad_input,
                                      "generator length does not match degree");
            gens.push_back(Perm(std::move(img)));
        }
        return GroupSpec::from_perm_generators(degree, gens, max_order);
    }
    throw ValidationError(ErrorKind::bad_input,
                          "group needs \"order\"+\"table\" or \"degree\"+\"generators\"");
}

enum class InputKind { space, poset, group };

inline InputKind input_kind(const nlohmann::json& j) {
    if (j.is_object() && j.contains("points")) return InputKind::space;
    if (j.is_object() && j.contains("elements")) return InputKind::poset;
    if (j.is_object() && (j.contains("table") || j.contains("degree")))
        return InputKind::group;
    throw ValidationError(ErrorKind::bad_input,
                          "input is not a space, poset, or group");
}

inline std::vector<std::string> numbered_names(int n, const std::string& prefix = "") {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

} // namespace fintop
