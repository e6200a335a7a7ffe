#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unilab/semimetric.hpp"

namespace unilab {

bool is_prime(unsigned long p);

// Exponent of p in x, negative when p divides the denominator. x must be
// nonzero.
long padic_valuation(unsigned long p, const Rational& x);

// Multiplicative size function on the rationals: one of the three classical
// families, raised to a positive rational power.
struct AbsoluteValue {
  enum class Kind { Trivial, PAdic, Standard };

  static AbsoluteValue trivial(Rational power = Rational(1));
  static AbsoluteValue p_adic(unsigned long p, Rational power = Rational(1));
  static AbsoluteValue standard(Rational power = Rational(1));

  // The two non-archimedean families.
  bool ultrametric_kind() const { return kind != Kind::Standard; }

  Kind kind;
  unsigned long p = 0;
  Rational power;

 private:
  AbsoluteValue(Kind k, unsigned long prime, Rational t)
      : kind(k), p(prime), power(std::move(t)) {}
};

// Nonnegative scalar of the form base^exp with rational base and exponent,
// kept exact. Values with an integer exponent collapse to plain rationals;
// comparisons cross-power so they stay exact in every case.
class PowerValue {
 public:
  static PowerValue exact(const Rational& v);
  static PowerValue power(const Rational& base, const Rational& exp);

  bool is_exact() const { return exp_ == Rational(1); }
  const Rational& exact_value() const;
  const Rational& base() const { return base_; }
  const Rational& exp() const { return exp_; }

  PowerValue pow(const Rational& e) const;

  // -1, 0, 1 as the values compare.
  static int compare(const PowerValue& a, const PowerValue& b);

  std::string str() const;

 private:
  PowerValue(Rational base, Rational exp)
      : base_(std::move(base)), exp_(std::move(exp)) {}
  void normalize();

  Rational base_;
  Rational exp_;
};

PowerValue abs_eval(const AbsoluteValue& av, const Rational& x);

struct AbsValidation {
  bool ok = true;
  // One line per violated law, carrying the pair it first fails at.
  std::vector<std::string> issues;
  // Overall first failing pair.
  std::optional<std::pair<Rational, Rational>> witness;
};

// Definiteness, multiplicativity and the level inequality over all pairs of
// samples, exactly. Multiplicativity is decided per kind (valuations add,
// plain absolute values multiply) so no root arithmetic is ever needed for
// it; the level inequality at a finite level needs exact summand values.
AbsValidation validate_absolute_value(const AbsoluteValue& av,
                                      const QParam& level,
                                      const std::vector<Rational>& samples);

enum class Archimedean { Archimedean, NonArchimedeanCertified, Undetermined };

struct ArchimedeanReport {
  Archimedean verdict;
  std::optional<long> witness_n;  // least n with |n| > 1, when archimedean
  long n_max;
};

// |n| > 1 for some integer n is the archimedean property. The two
// ultrametric kinds certify its failure outright; the standard kind finds
// the witness n = 2 immediately.
ArchimedeanReport is_archimedean(const AbsoluteValue& av, long n_max = 1000);

// d(x, y) = |x - y| on a list of distinct samples. Entries must come out
// exact. Ultrametric kinds give the infinite level; the standard kind at
// power t gives level 1/t.
SemiMetric metric_from_abs(const AbsoluteValue& av,
                           const std::vector<Rational>& samples);

// Norm recipe on Q^dim over the given absolute value.
struct UltranormSpec {
  enum class Kind { Sup, TrivialNorm };
  UltranormSpec(Kind k, int dimension, AbsoluteValue absval);

  Kind kind;
  int dim;
  AbsoluteValue abs;
};

Rational norm_eval(const UltranormSpec& spec, const std::vector<Rational>& v);

// All reduced fractions a/b with |a| <= height and 1 <= b <= height,
// ascending.
std::vector<Rational> farey_samples(long height);

// Certifies max(a,b) <= (a^q + b^q)^(1/q) <= 2^(1/q) max(a,b) for
// nonnegative a, b by termwise monotone comparisons; no root sums are
// formed. The infinite level degenerates to max = max.
bool q_power_bracketing_holds(const Rational& a, const Rational& b,
                              const QParam& q);

}  // namespace unilab
