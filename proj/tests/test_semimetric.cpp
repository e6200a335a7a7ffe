#include <vector>

#include "doctest.h"
#include "unilab/semimetric.hpp"

using namespace unilab;

namespace {

Rational Q(const char* text) { return Rational::parse(text); }

std::vector<std::vector<Rational>> matrix3(const char* d01, const char* d02,
                                           const char* d12) {
  return {{Q("0"), Q(d01), Q(d02)},
          {Q(d01), Q("0"), Q(d12)},
          {Q(d02), Q(d12), Q("0")}};
}

SemiMetric path3() {
  // Points 0, 1, 2 on a line, one unit apart, ordinary distance.
  return SemiMetric(FiniteSpace(3), QParam::finite(Rational(1)),
                    matrix3("1", "2", "1"));
}

}  // namespace

TEST_CASE("level parameter parses and prints") {
  CHECK(QParam::inf().str() == "inf");
  CHECK(QParam::finite(Rational(3, 2)).str() == "q:3/2");
  CHECK(QParam::parse("inf").is_inf());
  CHECK(QParam::parse("q:2") == QParam::finite(Rational(2)));
  CHECK(QParam::parse("q:3/2") == QParam::finite(Rational(3, 2)));
  CHECK_THROWS_AS(QParam::parse("2"), UnilabError);
  CHECK_THROWS_AS(QParam::parse("q:"), UnilabError);
  CHECK_THROWS_AS(QParam::parse("q:0"), UnilabError);
  CHECK_THROWS_AS(QParam::parse("q:-1"), UnilabError);
  CHECK_THROWS_AS(QParam::finite(Rational(0)), UnilabError);
  CHECK_THROWS_AS(QParam::inf().q(), UnilabError);
}

TEST_CASE("validation at the infinite level") {
  auto good = validate_semimetric(matrix3("1", "1", "1"), QParam::inf());
  CHECK(good.valid());
  CHECK(good.is_metric);

  // 0 -> 2 beats the max through 1.
  auto bad = validate_semimetric(matrix3("1", "2", "1"), QParam::inf());
  CHECK_FALSE(bad.valid());
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(bad.violations[0].x == 0);
  CHECK(bad.violations[0].y == 1);
  CHECK(bad.violations[0].z == 2);
}

TEST_CASE("validation at integer levels") {
  CHECK(validate_semimetric(matrix3("1", "2", "1"), QParam::finite(Q("1")))
            .valid());
  CHECK_FALSE(
      validate_semimetric(matrix3("1", "5/2", "1"), QParam::finite(Q("1")))
          .valid());
  // 3-4-5 square distances pass exactly at level 2.
  CHECK(validate_semimetric(matrix3("3", "5", "4"), QParam::finite(Q("2")))
            .valid());
  CHECK_FALSE(
      validate_semimetric(matrix3("3", "51/10", "4"), QParam::finite(Q("2")))
          .valid());
}

TEST_CASE("validation at fractional levels uses exact root comparison") {
  // Squared distances of collinear points: equality at level 1/2.
  CHECK(validate_semimetric(matrix3("1", "4", "1"), QParam::finite(Q("1/2")))
            .valid());
  CHECK_FALSE(
      validate_semimetric(matrix3("1", "9/2", "1"), QParam::finite(Q("1/2")))
          .valid());
  // Cubed distances at level 1/3: cbrt(27) = cbrt(1) + cbrt(8).
  CHECK(validate_semimetric(matrix3("1", "27", "8"), QParam::finite(Q("1/3")))
            .valid());
  CHECK_FALSE(
      validate_semimetric(matrix3("1", "28", "8"), QParam::finite(Q("1/3")))
          .valid());
}

TEST_CASE("validation reports shape issues") {
  auto ragged = validate_semimetric({{Q("0"), Q("1")}, {Q("1")}},
                                    QParam::inf());
  CHECK_FALSE(ragged.shape_ok);

  auto asym = validate_semimetric(
      {{Q("0"), Q("1")}, {Q("2"), Q("0")}}, QParam::inf());
  CHECK_FALSE(asym.shape_ok);

  auto diag = validate_semimetric(
      {{Q("1"), Q("1")}, {Q("1"), Q("0")}}, QParam::inf());
  CHECK_FALSE(diag.shape_ok);

  auto neg = validate_semimetric(
      {{Q("0"), Q("-1")}, {Q("-1"), Q("0")}}, QParam::inf());
  CHECK_FALSE(neg.shape_ok);
}

TEST_CASE("construction validates and reports the first witness") {
  CHECK_NOTHROW(path3());
  CHECK_THROWS_AS(SemiMetric(FiniteSpace(3), QParam::inf(),
                             matrix3("1", "2", "1")),
                  UnilabError);
  CHECK_THROWS_AS(SemiMetric(FiniteSpace(4), QParam::inf(),
                             matrix3("1", "1", "1")),
                  UnilabError);
}

TEST_CASE("discrete and zero matrices") {
  SemiMetric disc = SemiMetric::discrete(FiniteSpace(4));
  CHECK(disc.level().is_inf());
  CHECK(disc.is_metric());
  CHECK(disc.at(0, 1) == Rational(1));
  CHECK(disc.at(2, 2) == Rational(0));
  CHECK(disc.canonical_radii() ==
        std::vector<Rational>{Rational(1), Rational(2)});

  SemiMetric zero = SemiMetric::zero(FiniteSpace(3));
  CHECK_FALSE(zero.is_metric());
  CHECK(zero.canonical_radii() == std::vector<Rational>{Rational(1)});
}

TEST_CASE("canonical radii cover every entourage") {
  SemiMetric d = path3();
  CHECK(d.canonical_radii() ==
        std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
  // Any radius between two canonical ones gives the same entourage as the
  // canonical radius above it.
  CHECK(entourage(d, Q("3/2")) == entourage(d, Q("2")));
  CHECK(entourage(d, Q("1/2")) == entourage(d, Q("1")));
  CHECK(entourage(d, Q("100")) == entourage(d, Q("3")));
  CHECK_THROWS_AS(entourage(d, Q("0")), UnilabError);
}

TEST_CASE("entourages and balls are strict sublevels") {
  SemiMetric d = path3();
  Relation u1 = entourage(d, Rational(1));
  CHECK(u1 == Relation::diagonal(d.space()));
  Relation u2 = entourage(d, Rational(2));
  CHECK(u2.test(0, 1));
  CHECK(u2.test(1, 2));
  CHECK_FALSE(u2.test(0, 2));
  CHECK(ball(d, 1, Rational(2)) == ElementSet::of(3, {0, 1, 2}));
  CHECK(ball(d, 0, Rational(2)) == ElementSet::of(3, {0, 1}));
  CHECK(ball(d, 0, Rational(2), /*closed=*/true) ==
        ElementSet::of(3, {0, 1, 2}));
}

TEST_CASE("truncation keeps the level and caps entries") {
  SemiMetric t = truncate(path3(), Rational(3, 2));
  CHECK(t.at(0, 2) == Rational(3, 2));
  CHECK(t.at(0, 1) == Rational(1));
  CHECK(t.level() == QParam::finite(Rational(1)));
  CHECK(validate_semimetric(
            {{t.at(0, 0), t.at(0, 1), t.at(0, 2)},
             {t.at(1, 0), t.at(1, 1), t.at(1, 2)},
             {t.at(2, 0), t.at(2, 1), t.at(2, 2)}},
            t.level())
            .valid());
  CHECK_THROWS_AS(truncate(path3(), Rational(0)), UnilabError);
}

TEST_CASE("pointwise maximum takes the weakest level") {
  SemiMetric a = path3();  // level 1
  SemiMetric b(FiniteSpace(3), QParam::finite(Rational(2)),
               matrix3("3", "5", "4"));
  SemiMetric m = max_combine({a, b});
  CHECK(m.level() == QParam::finite(Rational(1)));
  CHECK(m.at(0, 2) == Rational(5));
  CHECK(m.at(0, 1) == Rational(3));

  SemiMetric disc = SemiMetric::discrete(FiniteSpace(3));
  CHECK(max_combine({disc, a}).level() == QParam::finite(Rational(1)));
  CHECK(max_combine({disc, disc}).level().is_inf());
  CHECK_THROWS_AS(max_combine({}), UnilabError);
}

TEST_CASE("sequence combination caps later terms harder") {
  SemiMetric a = path3();
  SemiMetric b(FiniteSpace(3), QParam::finite(Rational(1)),
               matrix3("2", "2", "2"));
  SemiMetric s = sequence_combine({a, b}, FiniteSpace(3));
  // max(min(a, 1), min(b, 1/2)) entrywise.
  CHECK(s.at(0, 1) == Rational(1));
  CHECK(s.at(0, 2) == Rational(1));
  CHECK(s.at(1, 2) == Rational(1));
  SemiMetric t = sequence_combine({b, a}, FiniteSpace(3));
  CHECK(t.at(0, 1) == Rational(1));

  SemiMetric empty = sequence_combine({}, FiniteSpace(2));
  CHECK(empty.at(0, 1) == Rational(0));
  CHECK(empty.level().is_inf());
}

TEST_CASE("entrywise powers move the level") {
  SemiMetric d = path3();
  SemiMetric sq = power_transform(d, Rational(2));
  CHECK(sq.at(0, 2) == Rational(4));
  CHECK(sq.level() == QParam::finite(Rational(1, 2)));

  SemiMetric back = power_transform(sq, Rational(1, 2));
  CHECK(back.at(0, 2) == Rational(2));
  CHECK(back.level() == QParam::finite(Rational(1)));

  SemiMetric disc = SemiMetric::discrete(FiniteSpace(3));
  CHECK(power_transform(disc, Rational(7)).level().is_inf());

  // Entries without exact roots are refused.
  SemiMetric three(FiniteSpace(2), QParam::finite(Rational(1)),
                   {{Q("0"), Q("3")}, {Q("3"), Q("0")}});
  CHECK_THROWS_AS(power_transform(three, Rational(1, 2)), UnilabError);
  CHECK_THROWS_AS(power_transform(d, Rational(0)), UnilabError);
}

TEST_CASE("pullback along a map") {
  SemiMetric d = path3();
  SemiMetric p = pullback(d, {2, 0, 0, 1}, FiniteSpace(4));
  CHECK(p.at(0, 1) == d.at(2, 0));
  CHECK(p.at(1, 2) == Rational(0));
  CHECK(p.at(2, 3) == d.at(0, 1));
  CHECK(p.level() == d.level());
  CHECK_THROWS_AS(pullback(d, {0, 3}, FiniteSpace(2)), UnilabError);
  CHECK_THROWS_AS(pullback(d, {0}, FiniteSpace(2)), UnilabError);
}

TEST_CASE("partition matrices are ultrametric") {
  FiniteSpace s(4);
  SemiMetric d = discrete_from_partition(
      s, {ElementSet::of(4, {0, 2}), ElementSet::of(4, {1, 3})});
  CHECK(d.level().is_inf());
  CHECK(d.at(0, 2) == Rational(0));
  CHECK(d.at(0, 1) == Rational(1));
  CHECK_FALSE(d.is_metric());
  CHECK_THROWS_AS(
      discrete_from_partition(s, {ElementSet::of(4, {0, 1})}), UnilabError);
}
