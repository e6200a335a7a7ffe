#pragma once

#include <nlohmann/json.hpp>

#include "unilab/group.hpp"

namespace unilab {

// Wire formats, all deterministic: objects serialize with sorted keys,
// lists in canonical order (pairs lexicographic, subsets ascending),
// rationals as canonical "p/q" strings.

nlohmann::json to_json(const Rational& x);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FiniteSpace& s);
FiniteSpace space_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ElementSet& a);
ElementSet subset_from_json(const nlohmann::json& j, int carrier);

// {"size": n, "pairs": [[i, j], ...]}
nlohmann::json to_json(const Relation& u);
Relation relation_from_json(const nlohmann::json& j);

// {"size": n, "level": "inf" | "q:a/b", "values": [["0", ...], ...]}
nlohmann::json to_json(const SemiMetric& d);
SemiMetric semimetric_from_json(const nlohmann::json& j);

// {"size": n, "relations": [[[i, j], ...], ...]}
nlohmann::json to_json(const UniformityBase& b);
UniformityBase base_from_json(const nlohmann::json& j);

// {"elements": [...], "table": [[...], ...]}
nlohmann::json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Topology& t);

// Comma-separated integers, e.g. "0,2,3". Empty string gives an empty list.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace unilab
