#include <vector>

#include "doctest.h"
#include "unilab/generators.hpp"
#include "unilab/json_io.hpp"

using namespace unilab;
using nlohmann::json;

TEST_CASE("rationals accept strings and integers") {
  CHECK(rational_from_json(json("3/4")) == Rational(3, 4));
  CHECK(rational_from_json(json(-7)) == Rational(-7));
  CHECK(to_json(Rational(6, 8)) == json("3/4"));
  CHECK(rational_from_json(to_json(Rational(-22, 7))) == Rational(-22, 7));
  CHECK_THROWS_AS(rational_from_json(json(2.5)), UnilabError);
  CHECK_THROWS_AS(rational_from_json(json::array()), UnilabError);
  CHECK_THROWS_AS(rational_from_json(json("1/0")), UnilabError);
}

TEST_CASE("spaces keep their labels") {
  FiniteSpace plain(3);
  FiniteSpace back = space_from_json(to_json(plain));
  CHECK(back.size == 3);
  CHECK_FALSE(back.labels.has_value());

  FiniteSpace named(2, {"a", "b"});
  json j = to_json(named);
  CHECK(j.at("labels") == json::array({"a", "b"}));
  FiniteSpace named_back = space_from_json(j);
  REQUIRE(named_back.labels.has_value());
  CHECK((*named_back.labels)[1] == "b");

  CHECK_THROWS_AS(space_from_json(json{{"size", "three"}}), UnilabError);
  CHECK_THROWS_AS(space_from_json(json::array()), UnilabError);
}

TEST_CASE("subsets serialize as ascending index arrays") {
  ElementSet a = ElementSet::of(5, {4, 0, 2});
  CHECK(to_json(a) == json::array({0, 2, 4}));
  CHECK(subset_from_json(to_json(a), 5) == a);
  CHECK(subset_from_json(json::array(), 3) == ElementSet(3));
  CHECK_THROWS_AS(subset_from_json(json::array({5}), 5), UnilabError);
  CHECK_THROWS_AS(subset_from_json(json::array({"0"}), 5), UnilabError);
  CHECK_THROWS_AS(subset_from_json(json(7), 5), UnilabError);
}

TEST_CASE("relations serialize as lexicographic pair lists") {
  Relation u = Relation::from_pairs(FiniteSpace(3), {{2, 0}, {0, 1}, {0, 0}});
  json j = to_json(u);
  CHECK(j.at("size") == 3);
  CHECK(j.at("pairs") ==
        json::array({json::array({0, 0}), json::array({0, 1}),
                     json::array({2, 0})}));
  CHECK(relation_from_json(j) == u);
  CHECK_THROWS_AS(relation_from_json(json{{"size", 3}}), UnilabError);
  CHECK_THROWS_AS(
      relation_from_json(json{{"size", 3}, {"pairs", json::array({json::array({0})})}}),
      UnilabError);
  CHECK_THROWS_AS(
      relation_from_json(json{{"size", 2}, {"pairs", json::array({json::array({0, 2})})}}),
      UnilabError);
}

TEST_CASE("distance matrices round-trip with level and labels") {
  std::vector<std::vector<Rational>> values = {
      {Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(0)}};
  SemiMetric d(FiniteSpace(2, {"p", "q"}), QParam::finite(Rational(3, 2)),
               values);
  json j = to_json(d);
  CHECK(j.at("level") == "q:3/2");
  CHECK(j.at("values")[0][1] == "1/2");
  CHECK(j.at("labels")[0] == "p");
  SemiMetric back = semimetric_from_json(j);
  CHECK(back.level() == d.level());
  CHECK(back.at(0, 1) == d.at(0, 1));
  REQUIRE(back.space().labels.has_value());
  CHECK((*back.space().labels)[1] == "q");

  // Integer entries are accepted on input.
  json mixed{{"size", 2},
             {"level", "inf"},
             {"values", json::array({json::array({0, 1}), json::array({1, 0})})}};
  CHECK(semimetric_from_json(mixed).at(0, 1) == Rational(1));

  CHECK_THROWS_AS(semimetric_from_json(json{{"size", 2}}), UnilabError);
  json bad = j;
  bad["level"] = 2;
  CHECK_THROWS_AS(semimetric_from_json(bad), UnilabError);
}

TEST_CASE("bases round-trip member by member") {
  FiniteSpace space(3);
  Relation d = Relation::diagonal(space);
  Relation e = d;
  e.set(0, 1);
  e.set(1, 0);
  UniformityBase base({e, d});
  json j = to_json(base);
  CHECK(j.at("size") == 3);
  REQUIRE(j.at("relations").size() == 2);
  UniformityBase back = base_from_json(j);
  CHECK(back.members().size() == 2);
  CHECK(back.members()[0] == e);
  CHECK(back.members()[1] == d);
  CHECK_THROWS_AS(base_from_json(json{{"size", 3}}), UnilabError);
  // Parsing validates the axioms.
  json asym{{"size", 2},
            {"relations",
             json::array({json::array(
                 {json::array({0, 0}), json::array({0, 1}), json::array({1, 1})})})}};
  CHECK_THROWS_AS(base_from_json(asym), UnilabError);
}

TEST_CASE("groups round-trip with default element names") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  json j = to_json(s3);
  CHECK(j.at("elements")[0] == "012");
  FiniteGroup back = group_from_json(j);
  CHECK(back.size() == 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(back.mul(a, b) == s3.mul(a, b));

  json bare{{"table", json::array({json::array({0, 1}), json::array({1, 0})})}};
  FiniteGroup z2 = group_from_json(bare);
  CHECK(to_json(z2).at("elements") == json::array({"g0", "g1"}));

  json broken = bare;
  broken["table"][0][0] = 5;
  CHECK_THROWS_AS(group_from_json(broken), UnilabError);
  CHECK_THROWS_AS(group_from_json(json{{"table", 3}}), UnilabError);
}

TEST_CASE("topologies list their opens as subsets") {
  SemiMetric d = SemiMetric::discrete(FiniteSpace(2));
  Topology t = topology(base_from_semimetric(d));
  json j = to_json(t);
  CHECK(j.at("size") == 2);
  CHECK(j.at("opens") ==
        json::array({json::array(), json::array({0}), json::array({1}),
                     json::array({0, 1})}));
}

TEST_CASE("integer lists parse strictly") {
  CHECK(parse_int_list("0,2,3") == std::vector<int>{0, 2, 3});
  CHECK(parse_int_list("7") == std::vector<int>{7});
  CHECK(parse_int_list("").empty());
  CHECK(parse_int_list("1, 2") == std::vector<int>{1, 2});
  CHECK_THROWS_AS(parse_int_list("1,,2"), UnilabError);
  CHECK_THROWS_AS(parse_int_list("1,a"), UnilabError);
  CHECK_THROWS_AS(parse_int_list("1,2,"), UnilabError);
}

TEST_CASE("random structures survive a JSON round trip") {
  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    FiniteSpace space(1 + rng.uniform(1, 5));
    Relation u = random_relation(rng, space, 35);
    CHECK(relation_from_json(to_json(u)) == u);

    SemiMetric d = random_semimetric(rng, space);
    SemiMetric back = semimetric_from_json(to_json(d));
    CHECK(back.level() == d.level());
    for (int i = 0; i < d.size(); ++i)
      for (int j2 = 0; j2 < d.size(); ++j2)
        CHECK(back.at(i, j2) == d.at(i, j2));

    UniformityBase base = random_base(rng, space);
    UniformityBase base_back = base_from_json(to_json(base));
    REQUIRE(base_back.members().size() == base.members().size());
    for (size_t i = 0; i < base.members().size(); ++i)
      CHECK(base_back.members()[i] == base.members()[i]);
  }
}
