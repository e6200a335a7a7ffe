#include <vector>

#include "doctest.h"
#include "unilab/generators.hpp"

using namespace unilab;

TEST_CASE("seeded streams repeat and honor bounds") {
  Rng a(99);
  Rng b(99);
  bool hit_lo = false;
  bool hit_hi = false;
  for (int t = 0; t < 2000; ++t) {
    int x = a.uniform(-3, 5);
    CHECK(x == b.uniform(-3, 5));
    CHECK(x >= -3);
    CHECK(x <= 5);
    hit_lo = hit_lo || x == -3;
    hit_hi = hit_hi || x == 5;
  }
  CHECK(hit_lo);
  CHECK(hit_hi);
  CHECK(a.uniform(7, 7) == 7);

  Rng c(100);
  bool differs = false;
  for (int t = 0; t < 50 && !differs; ++t)
    differs = a.uniform(0, 1000) != c.uniform(0, 1000);
  CHECK(differs);
}

TEST_CASE("random relations respect density extremes") {
  Rng rng(7);
  FiniteSpace space(5);
  CHECK(random_relation(rng, space, 0) == Relation(space));
  CHECK(random_relation(rng, space, 100) == Relation::full(space));
  Relation some = random_relation(rng, space, 50);
  CHECK(some.size() == 5);

  Relation rs = random_reflexive_symmetric(rng, space, 30);
  RelationClassification c = classify(rs);
  CHECK(c.reflexive);
  CHECK(c.symmetric);
}

TEST_CASE("random matrices validate at their declared level") {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    FiniteSpace space(1 + rng.uniform(1, 5));
    SemiMetric d = random_semimetric(rng, space);
    CHECK(d.level() == QParam::finite(Rational(1)));
    std::vector<std::vector<Rational>> m(space.size);
    for (int i = 0; i < space.size; ++i) {
      m[i].resize(space.size);
      for (int j = 0; j < space.size; ++j) m[i][j] = d.at(i, j);
    }
    CHECK(validate_semimetric(m, d.level()).valid());

    SemiMetric u = random_ultrametric(rng, space);
    CHECK(u.level().is_inf());
    for (int i = 0; i < space.size; ++i)
      for (int j = 0; j < space.size; ++j)
        for (int k = 0; k < space.size; ++k)
          CHECK(!(u.at(i, k) > max(u.at(i, j), u.at(j, k))));
  }
}

TEST_CASE("random partitions cover without overlap") {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    FiniteSpace space(1 + rng.uniform(1, 7));
    auto blocks = random_partition(rng, space);
    ElementSet seen(space.size);
    for (const auto& b : blocks) {
      CHECK_FALSE(b.empty());
      CHECK_FALSE(seen.intersects(b));
      seen |= b;
    }
    CHECK(seen == ElementSet::all(space.size));
  }
}

TEST_CASE("random bases satisfy the axioms") {
  for (unsigned long seed : {1ul, 2ul, 3ul, 4ul, 5ul}) {
    Rng rng(seed);
    for (int t = 0; t < 8; ++t) {
      FiniteSpace space(1 + rng.uniform(0, 5));
      UniformityBase base = random_base(rng, space);
      CHECK(base.size() >= 1);
      CHECK(validate_base(base.members()).ok());
    }
  }
}

TEST_CASE("random maps stay in range") {
  Rng rng(10);
  for (int t = 0; t < 30; ++t) {
    auto f = random_map(rng, 6, 4);
    CHECK(f.size() == 6);
    for (int v : f) {
      CHECK(v >= 0);
      CHECK(v < 4);
    }
  }
  CHECK(random_map(rng, 0, 3).empty());
}

TEST_CASE("random subsets stay inside the carrier") {
  Rng rng(11);
  bool nonempty = false;
  for (int t = 0; t < 30; ++t) {
    ElementSet s = random_subset(rng, 6);
    CHECK(s.carrier_size() == 6);
    nonempty = nonempty || !s.empty();
  }
  CHECK(nonempty);
}
