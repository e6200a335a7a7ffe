#include <vector>

#include "doctest.h"
#include "unilab/connectivity.hpp"
#include "unilab/generators.hpp"

using namespace unilab;

namespace {

SemiMetric path3() {
  auto Q = [](long v) { return Rational(v); };
  return SemiMetric(FiniteSpace(3), QParam::finite(Rational(1)),
                    {{Q(0), Q(1), Q(2)},
                     {Q(1), Q(0), Q(1)},
                     {Q(2), Q(1), Q(0)}});
}

}  // namespace

TEST_CASE("edge separation between subsets") {
  SemiMetric d = path3();
  Relation u = entourage(d, Rational(2));  // edges 0-1 and 1-2
  CHECK(separated_by(ElementSet::of(3, {0}), ElementSet::of(3, {2}), u));
  CHECK_FALSE(
      separated_by(ElementSet::of(3, {0}), ElementSet::of(3, {1}), u));

  Relation no_diag(FiniteSpace(3));
  CHECK_THROWS_AS(
      separated_by(ElementSet::of(3, {0}), ElementSet::of(3, {1}), no_diag),
      UnilabError);
}

TEST_CASE("uniform separation produces a member witness") {
  UniformityBase base = base_from_semimetric(path3());
  auto w = uniformly_separated(ElementSet::of(3, {0}), ElementSet::of(3, {2}),
                               base);
  REQUIRE(w.has_value());
  CHECK_FALSE(w->test(0, 2));

  auto none = uniformly_separated(ElementSet::of(3, {0}),
                                  ElementSet::of(3, {0, 1}), base);
  CHECK_FALSE(none.has_value());
}

TEST_CASE("shortest chains by breadth first search") {
  SemiMetric d = path3();
  Relation u = entourage(d, Rational(2));
  auto c = find_chain(0, 2, u);
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<int>{0, 1, 2});
  CHECK(*find_chain(1, 1, u) == std::vector<int>{1});

  Relation disc = Relation::diagonal(FiniteSpace(3));
  CHECK_FALSE(find_chain(0, 2, disc).has_value());

  Relation bad(FiniteSpace(3));
  bad.set(0, 1);
  CHECK_THROWS_AS(find_chain(0, 1, bad), UnilabError);
}

TEST_CASE("chain components stay inside the subset") {
  SemiMetric d = path3();
  Relation u = entourage(d, Rational(2));
  auto all = chain_components(ElementSet::all(3), u);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == ElementSet::all(3));

  // Removing the middle point cuts the chain between 0 and 2.
  auto ends = chain_components(ElementSet::of(3, {0, 2}), u);
  REQUIRE(ends.size() == 2);
  CHECK(ends[0] == ElementSet::of(3, {0}));
  CHECK(ends[1] == ElementSet::of(3, {2}));
}

TEST_CASE("chain connectivity with frozen splits") {
  UniformityBase base = base_from_semimetric(path3());
  auto whole = is_chain_connected(ElementSet::all(3), base);
  CHECK_FALSE(whole.connected);  // the diagonal member shatters everything
  REQUIRE(whole.split.has_value());
  CHECK(whole.split->first == ElementSet::of(3, {0}));

  auto single = is_chain_connected(ElementSet::of(3, {1}), base);
  CHECK(single.connected);

  // A base whose smallest member still chains 0-1-2 keeps the set whole.
  Relation u = entourage(path3(), Rational(2));
  UniformityBase chained({equivalence_closure(u)});
  CHECK(is_chain_connected(ElementSet::all(3), chained).connected);
}

TEST_CASE("connectivity and separation are dual on every subset") {
  Rng rng(314);
  for (int i = 0; i < 12; ++i) {
    int n = rng.uniform(1, 4);
    UniformityBase base = random_base(rng, FiniteSpace(n));
    for (uint32_t m = 1; m < (1u << n); ++m) {
      ElementSet e = ElementSet::from_mask32(n, m);
      auto cc = is_chain_connected(e, base);
      auto split = separated_split(e, base);
      CHECK(cc.connected == !split.has_value());
      if (split) {
        CHECK((split->first | split->second) == e);
        CHECK_FALSE(split->first.empty());
        CHECK_FALSE(split->second.empty());
        CHECK_FALSE(split->first.intersects(split->second));
        CHECK(split->first.test(e.first()));
        CHECK(uniformly_separated(split->first, split->second, base)
                  .has_value());
      }
    }
  }
}

TEST_CASE("closure preserves chain connectivity both ways") {
  Rng rng(2718);
  for (int i = 0; i < 12; ++i) {
    int n = rng.uniform(1, 4);
    UniformityBase base = random_base(rng, FiniteSpace(n));
    for (uint32_t m = 1; m < (1u << n); ++m) {
      ElementSet e = ElementSet::from_mask32(n, m);
      ElementSet closed = closure(base, e);
      CHECK(is_chain_connected(e, base).connected ==
            is_chain_connected(closed, base).connected);
    }
  }
}

TEST_CASE("self-separated subsets in mask order") {
  FiniteSpace s(3);
  Relation v = relation_from_partition(
      s, {ElementSet::of(3, {0}), ElementSet::of(3, {1, 2})});
  UniformityBase base({v});
  auto sets = self_separated_sets(base);
  REQUIRE(sets.size() == 4);
  CHECK(sets[0] == ElementSet(3));
  CHECK(sets[1] == ElementSet::of(3, {0}));
  CHECK(sets[2] == ElementSet::of(3, {1, 2}));
  CHECK(sets[3] == ElementSet::all(3));
}

TEST_CASE("dimension report on frozen spaces") {
  // Discrete: everything holds.
  UniformityBase disc =
      base_from_semimetric(SemiMetric::discrete(FiniteSpace(3)));
  auto r1 = dimension_zero_report(disc);
  CHECK(r1.uniformly_zero_dimensional);
  CHECK(r1.strongly_zero_dimensional);
  CHECK(r1.topologically_zero_dimensional);
  CHECK(r1.strongly_totally_separated);
  CHECK(r1.totally_separated);
  CHECK(r1.hausdorff);

  // Indiscrete: zero-dimensionality without any separation.
  UniformityBase zero =
      base_from_semimetric(SemiMetric::zero(FiniteSpace(3)));
  auto r2 = dimension_zero_report(zero);
  CHECK(r2.uniformly_zero_dimensional);
  CHECK(r2.strongly_zero_dimensional);
  CHECK(r2.topologically_zero_dimensional);
  CHECK_FALSE(r2.strongly_totally_separated);
  CHECK_FALSE(r2.totally_separated);
  CHECK_FALSE(r2.hausdorff);

  // The path metric still carries the diagonal, hence stays discrete.
  auto r3 = dimension_zero_report(base_from_semimetric(path3()));
  CHECK(r3.uniformly_zero_dimensional);
  CHECK(r3.hausdorff);
}

TEST_CASE("implication chain on random bases") {
  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    int n = rng.uniform(1, 5);
    UniformityBase base = random_base(rng, FiniteSpace(n));
    auto r = dimension_zero_report(base);
    if (r.uniformly_zero_dimensional) CHECK(r.strongly_zero_dimensional);
    if (r.strongly_zero_dimensional) CHECK(r.topologically_zero_dimensional);
    if (r.strongly_totally_separated) CHECK(r.totally_separated);
    if (r.totally_separated) CHECK(r.hausdorff);
  }
}

TEST_CASE("rational chains are exact and tight") {
  auto half = rational_chain(Rational(0), Rational(1), Rational(1, 2));
  CHECK(half == std::vector<Rational>{Rational(0), Rational(1, 4),
                                      Rational(1, 2), Rational(3, 4),
                                      Rational(1)});

  auto down = rational_chain(Rational(1), Rational(0), Rational(1, 2));
  CHECK(down.front() == Rational(1));
  CHECK(down.back() == Rational(0));
  CHECK(down.size() == 5);

  auto fine = rational_chain(Rational(0), Rational(1), Rational(1, 1000));
  CHECK(fine.size() == 2001);
  CHECK(fine.front() == Rational(0));
  CHECK(fine.back() == Rational(1));
  for (size_t i = 1; i < fine.size(); ++i)
    CHECK((fine[i] - fine[i - 1]).abs() < Rational(1, 1000));

  auto point = rational_chain(Rational(3, 7), Rational(3, 7), Rational(1));
  REQUIRE(point.size() == 1);
  CHECK(point[0] == Rational(3, 7));

  CHECK_THROWS_AS(rational_chain(Rational(0), Rational(1), Rational(0)),
                  UnilabError);
  CHECK_THROWS_AS(
      rational_chain(Rational(0), Rational(1), Rational(1, 1000000000)),
      UnilabError);
}
