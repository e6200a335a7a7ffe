#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unilab/rational.hpp"
#include "unilab/relation.hpp"

namespace unilab {

// Strength level of the triangle-style inequality a distance matrix is held
// to. A finite level q > 0 demands d(x,z)^q <= d(x,y)^q + d(y,z)^q; the
// infinite level demands d(x,z) <= max(d(x,y), d(y,z)). Larger q is a
// stronger requirement, with the max form as the limiting case.
class QParam {
 public:
  static QParam inf() { return QParam(true, Rational(1)); }
  static QParam finite(const Rational& q) {
    if (q.sign() <= 0)
      fail(ErrorCode::InvalidArgument, "level must be positive");
    return QParam(false, q);
  }

  bool is_inf() const { return inf_; }
  const Rational& q() const {
    if (inf_) fail(ErrorCode::InvalidArgument, "infinite level has no q");
    return q_;
  }

  std::string str() const { return inf_ ? "inf" : "q:" + q_.str(); }
  static QParam parse(const std::string& text);

  friend bool operator==(const QParam& a, const QParam& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.q_ == b.q_);
  }

 private:
  QParam(bool inf, Rational q) : inf_(inf), q_(std::move(q)) {}
  bool inf_;
  Rational q_;
};

struct TriangleViolation {
  int x, y, z;  // d(x,z) beats the bound through y
};

struct MetricValidation {
  bool shape_ok = true;
  std::vector<std::string> shape_issues;
  std::vector<TriangleViolation> violations;
  bool is_metric = false;  // additionally, off-diagonal entries all positive
  bool valid() const { return shape_ok && violations.empty(); }
};

// Checks a candidate distance matrix against the given level without
// constructing anything. Exact throughout; non-integer finite levels go
// through certified root comparisons.
MetricValidation validate_semimetric(
    const std::vector<std::vector<Rational>>& values, const QParam& level);

// Distance matrix on a finite carrier satisfying the inequality at its
// level. Construction validates.
class SemiMetric {
 public:
  SemiMetric(FiniteSpace space, QParam level,
             std::vector<std::vector<Rational>> values);

  static SemiMetric zero(FiniteSpace space, QParam level = QParam::inf());
  static SemiMetric discrete(FiniteSpace space);

  const FiniteSpace& space() const { return space_; }
  int size() const { return space_.size; }
  const QParam& level() const { return level_; }

  const Rational& at(int i, int j) const {
    return values_[static_cast<size_t>(i) * space_.size + j];
  }

  bool is_metric() const;

  // Distinct positive entries in increasing order, followed by one value
  // past the maximum entry. For the zero matrix this is just {1}. Every
  // entourage of the matrix arises at one of these radii.
  std::vector<Rational> canonical_radii() const;

 private:
  SemiMetric(FiniteSpace space, QParam level, std::vector<Rational> flat,
             bool trusted);
  friend SemiMetric pullback(const SemiMetric&, const std::vector<int>&,
                             const FiniteSpace&);
  friend SemiMetric truncate(const SemiMetric&, const Rational&);
  friend SemiMetric max_combine(const std::vector<SemiMetric>&);
  friend SemiMetric sequence_combine(const std::vector<SemiMetric>&,
                                     const FiniteSpace&);
  friend SemiMetric power_transform(const SemiMetric&, const Rational&);
  friend SemiMetric discrete_from_partition(const FiniteSpace&,
                                            const std::vector<ElementSet>&);

  FiniteSpace space_;
  QParam level_;
  std::vector<Rational> values_;
};

// U_d(r) = { (x, y) : d(x, y) < r }, for r > 0.
Relation entourage(const SemiMetric& d, const Rational& r);

ElementSet ball(const SemiMetric& d, int center, const Rational& r,
                bool closed = false);

// min(d, t) for t > 0. Keeps the level.
SemiMetric truncate(const SemiMetric& d, const Rational& t);

// Pointwise maximum. The result carries the weakest of the input levels
// (finite levels compare by value, the infinite level is strongest).
SemiMetric max_combine(const std::vector<SemiMetric>& ds);

// max_j min(d_j, 1/(j+1)) over the listed matrices. The classic device for
// packing a sequence of semimetrics into one; with finitely many inputs the
// tail cutoffs simply stop mattering. Empty list gives the zero matrix.
SemiMetric sequence_combine(const std::vector<SemiMetric>& ds,
                            const FiniteSpace& space);

// Entrywise q-th power. Every entry must have an exact rational q-th power,
// else InexactPower. Level l becomes l/q (infinite stays infinite).
SemiMetric power_transform(const SemiMetric& d, const Rational& q);

// d(f(x), f(y)) on the source carrier.
SemiMetric pullback(const SemiMetric& target, const std::vector<int>& f,
                    const FiniteSpace& source);

// Distance 0 within a block, 1 across blocks. Infinite level.
SemiMetric discrete_from_partition(const FiniteSpace& space,
                                   const std::vector<ElementSet>& blocks);

}  // namespace unilab
