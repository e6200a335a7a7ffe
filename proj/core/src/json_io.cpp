#include "unilab/json_io.hpp"

namespace unilab {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    fail(ErrorCode::ParseError, std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer())
    fail(ErrorCode::ParseError, std::string("field \"") + name +
                                    "\" must be an integer");
  return v.get<int>();
}

}  // namespace

json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer())
    return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string())
    fail(ErrorCode::ParseError, "rational must be a string or integer");
  return Rational::parse(j.get<std::string>());
}

json to_json(const FiniteSpace& s) {
  json j{{"size", s.size}};
  if (s.labels) j["labels"] = *s.labels;
  return j;
}

FiniteSpace space_from_json(const json& j) {
  int n = int_field(j, "size");
  if (j.contains("labels")) {
    const json& ls = j.at("labels");
    if (!ls.is_array())
      fail(ErrorCode::ParseError, "labels must be an array");
    std::vector<std::string> names;
    for (const auto& l : ls) {
      if (!l.is_string())
        fail(ErrorCode::ParseError, "labels must be strings");
      names.push_back(l.get<std::string>());
    }
    return FiniteSpace(n, std::move(names));
  }
  return FiniteSpace(n);
}

json to_json(const ElementSet& a) { return json(a.indices()); }

ElementSet subset_from_json(const json& j, int carrier) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "subset must be an array");
  std::vector<int> xs;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      fail(ErrorCode::ParseError, "subset entries must be integers");
    xs.push_back(v.get<int>());
  }
  return ElementSet::from_indices(carrier, xs);
}

namespace {

json pairs_to_json(const Relation& u) {
  json out = json::array();
  for (auto [i, j] : u.pairs()) out.push_back(json::array({i, j}));
  return out;
}

Relation pairs_from_json(const json& j, const FiniteSpace& space) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "pairs must be an array");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer())
      fail(ErrorCode::ParseError, "each pair must be two integers");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return Relation::from_pairs(space, pairs);
}

}  // namespace

json to_json(const Relation& u) {
  return json{{"size", u.size()}, {"pairs", pairs_to_json(u)}};
}

Relation relation_from_json(const json& j) {
  FiniteSpace space(int_field(j, "size"));
  return pairs_from_json(field(j, "pairs"), space);
}

json to_json(const SemiMetric& d) {
  json values = json::array();
  for (int i = 0; i < d.size(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < d.size(); ++j2) row.push_back(d.at(i, j2).str());
    values.push_back(std::move(row));
  }
  json j{{"size", d.size()},
         {"level", d.level().str()},
         {"values", std::move(values)}};
  if (d.space().labels) j["labels"] = *d.space().labels;
  return j;
}

SemiMetric semimetric_from_json(const json& j) {
  FiniteSpace space = space_from_json(j);
  const json& level_field = field(j, "level");
  if (!level_field.is_string())
    fail(ErrorCode::ParseError, "level must be a string");
  QParam level = QParam::parse(level_field.get<std::string>());
  const json& values = field(j, "values");
  if (!values.is_array())
    fail(ErrorCode::ParseError, "values must be an array");
  std::vector<std::vector<Rational>> matrix;
  for (const auto& row : values) {
    if (!row.is_array())
      fail(ErrorCode::ParseError, "values rows must be arrays");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    matrix.push_back(std::move(r));
  }
  return SemiMetric(std::move(space), level, std::move(matrix));
}

json to_json(const UniformityBase& b) {
  json rels = json::array();
  for (const auto& u : b.members()) rels.push_back(pairs_to_json(u));
  return json{{"size", b.size()}, {"relations", std::move(rels)}};
}

UniformityBase base_from_json(const json& j) {
  FiniteSpace space(int_field(j, "size"));
  const json& rels = field(j, "relations");
  if (!rels.is_array())
    fail(ErrorCode::ParseError, "relations must be an array");
  std::vector<Relation> members;
  for (const auto& r : rels) members.push_back(pairs_from_json(r, space));
  return UniformityBase(std::move(members));
}

json to_json(const FiniteGroup& g) {
  json table = json::array();
  for (int i = 0; i < g.size(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < g.size(); ++j2) row.push_back(g.mul(i, j2));
    table.push_back(std::move(row));
  }
  json j{{"table", std::move(table)}};
  if (g.names())
    j["elements"] = *g.names();
  else {
    std::vector<std::string> names;
    for (int i = 0; i < g.size(); ++i) names.push_back("g" + std::to_string(i));
    j["elements"] = names;
  }
  return j;
}

FiniteGroup group_from_json(const json& j) {
  const json& table = field(j, "table");
  if (!table.is_array())
    fail(ErrorCode::ParseError, "table must be an array");
  std::vector<std::vector<int>> rows;
  for (const auto& row : table) {
    if (!row.is_array())
      fail(ErrorCode::ParseError, "table rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        fail(ErrorCode::ParseError, "table entries must be integers");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  std::optional<std::vector<std::string>> names;
  if (j.contains("elements")) {
    const json& els = j.at("elements");
    if (!els.is_array())
      fail(ErrorCode::ParseError, "elements must be an array");
    std::vector<std::string> ns;
    for (const auto& e : els) {
      if (!e.is_string())
        fail(ErrorCode::ParseError, "elements must be strings");
      ns.push_back(e.get<std::string>());
    }
    names = std::move(ns);
  }
  return FiniteGroup(std::move(rows), std::move(names));
}

json to_json(const Topology& t) {
  json opens = json::array();
  for (const auto& o : t.opens()) opens.push_back(to_json(o));
  return json{{"size", t.space().size}, {"opens", std::move(opens)}};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) fail(ErrorCode::ParseError, "empty entry in list");
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad integer \"" + tok + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace unilab
