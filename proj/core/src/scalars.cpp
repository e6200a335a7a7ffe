#include "unilab/scalars.hpp"

#include <algorithm>
#include <numeric>

namespace unilab {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (unsigned long d = 3; d <= p / d; d += 2)
    if (p % d == 0) return false;
  return true;
}

long padic_valuation(unsigned long p, const Rational& x) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "modulus is not prime");
  if (x.is_zero()) fail(ErrorCode::ZeroInput, "valuation of zero");
  mpz_class prime(static_cast<unsigned long>(p));
  mpz_class tmp;
  mpz_class num = x.num();
  mpz_class den = x.den();
  long vn = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t()));
  long vd = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t()));
  return vn - vd;
}

namespace {

void check_power(const Rational& t) {
  if (t.sign() <= 0)
    fail(ErrorCode::InvalidArgument, "power must be positive");
}

}  // namespace

AbsoluteValue AbsoluteValue::trivial(Rational power) {
  check_power(power);
  return AbsoluteValue(Kind::Trivial, 0, std::move(power));
}

AbsoluteValue AbsoluteValue::p_adic(unsigned long p, Rational power) {
  check_power(power);
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "modulus is not prime");
  return AbsoluteValue(Kind::PAdic, p, std::move(power));
}

AbsoluteValue AbsoluteValue::standard(Rational power) {
  check_power(power);
  return AbsoluteValue(Kind::Standard, 0, std::move(power));
}

PowerValue PowerValue::exact(const Rational& v) {
  if (v.is_negative())
    fail(ErrorCode::InvalidArgument, "negative scalar value");
  return PowerValue(v, Rational(1));
}

PowerValue PowerValue::power(const Rational& base, const Rational& exp) {
  if (base.is_negative())
    fail(ErrorCode::InvalidArgument, "negative scalar base");
  if (base.is_zero() && exp.sign() <= 0)
    fail(ErrorCode::InvalidArgument, "zero base needs a positive exponent");
  PowerValue v(base, exp);
  v.normalize();
  return v;
}

void PowerValue::normalize() {
  if (base_.is_zero() || base_ == Rational(1) || exp_.is_zero()) {
    base_ = exp_.is_zero() ? Rational(1) : base_;
    exp_ = Rational(1);
    return;
  }
  if (exp_.is_integer()) {
    base_ = base_.pow_int(exp_.num().get_si());
    exp_ = Rational(1);
    return;
  }
  // Pull an exact root into the base when one exists, e.g. 4^(3/2) -> 8.
  Rational root;
  if (exact_root(base_, exp_.den().get_ui(), root)) {
    base_ = root.pow_int(exp_.num().get_si());
    exp_ = Rational(1);
  }
}

const Rational& PowerValue::exact_value() const {
  if (!is_exact())
    fail(ErrorCode::InexactPower,
         "value " + str() + " is not an exact rational");
  return base_;
}

PowerValue PowerValue::pow(const Rational& e) const {
  if (e.is_zero()) return exact(Rational(1));
  if (base_.is_zero()) {
    if (e.sign() < 0)
      fail(ErrorCode::InvalidArgument, "negative power of zero");
    return exact(Rational(0));
  }
  return power(base_, exp_ * e);
}

int PowerValue::compare(const PowerValue& a, const PowerValue& b) {
  auto sign3 = [](const Rational& u, const Rational& v) {
    if (u < v) return -1;
    if (u == v) return 0;
    return 1;
  };
  if (a.is_exact() && b.is_exact()) return sign3(a.base_, b.base_);
  if (a.is_exact() || b.is_exact()) {
    // One plain rational against base^(p/q): raise both to q.
    const PowerValue& plain = a.is_exact() ? a : b;
    const PowerValue& pw = a.is_exact() ? b : a;
    int flip = a.is_exact() ? 1 : -1;
    if (plain.base_.is_zero()) return -flip;  // pw is positive
    long p = pw.exp_.num().get_si();
    long q = pw.exp_.den().get_si();
    int c = sign3(plain.base_.pow_int(q), pw.base_.pow_int(p));
    return flip * c;
  }
  // base1^(p1/q1) vs base2^(p2/q2): raise both to q1*q2.
  long p1 = a.exp_.num().get_si(), q1 = a.exp_.den().get_si();
  long p2 = b.exp_.num().get_si(), q2 = b.exp_.den().get_si();
  return sign3(a.base_.pow_int(p1 * q2), b.base_.pow_int(p2 * q1));
}

std::string PowerValue::str() const {
  if (is_exact()) return base_.str();
  return base_.str() + "^(" + exp_.str() + ")";
}

PowerValue abs_eval(const AbsoluteValue& av, const Rational& x) {
  if (x.is_zero()) return PowerValue::exact(Rational(0));
  switch (av.kind) {
    case AbsoluteValue::Kind::Trivial:
      return PowerValue::exact(Rational(1));
    case AbsoluteValue::Kind::PAdic: {
      long v = padic_valuation(av.p, x);
      return PowerValue::power(Rational(static_cast<long>(av.p)),
                               Rational(-v) * av.power);
    }
    case AbsoluteValue::Kind::Standard:
      return PowerValue::power(x.abs(), av.power);
  }
  fail(ErrorCode::InvalidArgument, "unknown kind");
}

AbsValidation validate_absolute_value(const AbsoluteValue& av,
                                      const QParam& level,
                                      const std::vector<Rational>& samples) {
  if (samples.empty()) fail(ErrorCode::EmptyList, "no samples");
  AbsValidation out;
  std::vector<std::string> seen;
  auto report = [&](const Rational& x, const Rational& y,
                    const std::string& law) {
    out.ok = false;
    if (!out.witness) out.witness = {x, y};
    for (const std::string& s : seen)
      if (s == law) return;
    seen.push_back(law);
    out.issues.push_back(law + " fails first at (" + x.str() + ", " +
                         y.str() + ")");
  };

  for (const auto& x : samples) {
    PowerValue v = abs_eval(av, x);
    bool zero = PowerValue::compare(v, PowerValue::exact(Rational(0))) == 0;
    if (zero != x.is_zero()) report(x, x, "definiteness");
  }

  for (const auto& x : samples)
    for (const auto& y : samples) {
      if (x.is_zero() || y.is_zero()) continue;  // both sides are zero
      bool mult_ok = true;
      switch (av.kind) {
        case AbsoluteValue::Kind::Trivial:
          mult_ok = true;
          break;
        case AbsoluteValue::Kind::PAdic:
          mult_ok = padic_valuation(av.p, x * y) ==
                    padic_valuation(av.p, x) + padic_valuation(av.p, y);
          break;
        case AbsoluteValue::Kind::Standard:
          mult_ok = (x * y).abs() == x.abs() * y.abs();
          break;
      }
      if (!mult_ok) report(x, y, "multiplicativity");
    }

  for (const auto& x : samples)
    for (const auto& y : samples) {
      PowerValue sum = abs_eval(av, x + y);
      PowerValue vx = abs_eval(av, x);
      PowerValue vy = abs_eval(av, y);
      const PowerValue& m = PowerValue::compare(vx, vy) >= 0 ? vx : vy;
      bool max_holds = PowerValue::compare(sum, m) <= 0;
      if (level.is_inf()) {
        if (!max_holds) report(x, y, "max inequality");
      } else if (!max_holds) {
        // The max form certifies any finite level termwise (the max's own
        // power is one of the summands). Only when it fails is the summed
        // form needed, and that needs exact summand values.
        const Rational& q = level.q();
        PowerValue lhs = sum.pow(q);
        Rational rhs = vx.pow(q).exact_value() + vy.pow(q).exact_value();
        if (PowerValue::compare(lhs, PowerValue::exact(rhs)) > 0)
          report(x, y, "level inequality");
      }
    }
  return out;
}

ArchimedeanReport is_archimedean(const AbsoluteValue& av, long n_max) {
  if (n_max < 2)
    fail(ErrorCode::InvalidArgument, "need to test at least up to 2");
  ArchimedeanReport out{Archimedean::Undetermined, std::nullopt, n_max};
  if (av.ultrametric_kind()) {
    // |n| <= 1 for every integer n: the valuation of an integer is
    // nonnegative, and the trivial kind never exceeds 1.
    out.verdict = Archimedean::NonArchimedeanCertified;
    return out;
  }
  PowerValue one = PowerValue::exact(Rational(1));
  for (long n = 2; n <= n_max; ++n) {
    if (PowerValue::compare(abs_eval(av, Rational(n)), one) > 0) {
      out.verdict = Archimedean::Archimedean;
      out.witness_n = n;
      return out;
    }
  }
  return out;
}

SemiMetric metric_from_abs(const AbsoluteValue& av,
                           const std::vector<Rational>& samples) {
  if (samples.empty()) fail(ErrorCode::EmptyList, "no samples");
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i] == samples[j])
        fail(ErrorCode::DuplicateSample, "repeated sample " + samples[i].str());
  int n = static_cast<int>(samples.size());
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& s : samples) names.push_back(s.str());
  FiniteSpace space(n, std::move(names));
  std::vector<std::vector<Rational>> values(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PowerValue v = abs_eval(av, samples[i] - samples[j]);
      if (!v.is_exact())
        fail(ErrorCode::InexactPower, "distance " + v.str() +
                                          " is not an exact rational");
      values[i][j] = v.exact_value();
    }
  QParam level = av.ultrametric_kind()
                     ? QParam::inf()
                     : QParam::finite(Rational(1) / av.power);
  return SemiMetric(std::move(space), level, std::move(values));
}

UltranormSpec::UltranormSpec(Kind k, int dimension, AbsoluteValue absval)
    : kind(k), dim(dimension), abs(std::move(absval)) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  if (kind == Kind::Sup && !abs.ultrametric_kind())
    fail(ErrorCode::InvalidArgument,
         "sup norm needs an ultrametric kind to be an ultranorm");
  if (kind == Kind::TrivialNorm && abs.kind != AbsoluteValue::Kind::Trivial)
    fail(ErrorCode::InvalidArgument,
         "the trivial norm is homogeneous only over the trivial kind");
}

Rational norm_eval(const UltranormSpec& spec, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != spec.dim)
    fail(ErrorCode::DimensionMismatch,
         "vector length " + std::to_string(v.size()) + " against dimension " +
             std::to_string(spec.dim));
  if (spec.kind == UltranormSpec::Kind::TrivialNorm) {
    for (const auto& c : v)
      if (!c.is_zero()) return Rational(1);
    return Rational(0);
  }
  PowerValue best = PowerValue::exact(Rational(0));
  for (const auto& c : v) {
    PowerValue cur = abs_eval(spec.abs, c);
    if (PowerValue::compare(cur, best) > 0) best = cur;
  }
  return best.exact_value();
}

std::vector<Rational> farey_samples(long height) {
  if (height < 1) fail(ErrorCode::InvalidArgument, "height must be positive");
  std::vector<Rational> out;
  for (long b = 1; b <= height; ++b)
    for (long a = -height; a <= height; ++a) {
      if (std::gcd(std::abs(a), b) != 1) continue;
      out.push_back(Rational(a, b));
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool q_power_bracketing_holds(const Rational& a, const Rational& b,
                              const QParam& q) {
  if (a.is_negative() || b.is_negative())
    fail(ErrorCode::InvalidArgument, "bracketing needs nonnegative values");
  Rational m = max(a, b);
  if (q.is_inf()) return m == max(a, b);
  // Lower bound: m^q is one of the two summands and the other one is >= 0.
  bool lower = (a == m || b == m) && !a.is_negative() && !b.is_negative();
  // Upper bound: a^q <= m^q and b^q <= m^q by monotonicity of powering on
  // nonnegative values, so the sum is at most 2 m^q.
  bool upper = a <= m && b <= m;
  if (q.q().is_integer()) {
    // Integer levels allow verifying both bounds with plain arithmetic.
    long e = q.q().num().get_si();
    Rational sum = a.pow_int(e) + b.pow_int(e);
    lower = lower && m.pow_int(e) <= sum;
    upper = upper && sum <= Rational(2) * m.pow_int(e);
  }
  return lower && upper;
}

}  // namespace unilab
