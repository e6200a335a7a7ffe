#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "unilab/errors.hpp"

namespace unilab {

// Exact rational number. A thin wrapper over GMP's mpq_class that pins down
// canonical string I/O ("p/q" in lowest terms, or a bare integer) and the
// handful of exact operations the rest of the library needs.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational parse(const std::string& text);
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // Integer power. Negative exponents require a nonzero base.
  Rational pow_int(long e) const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) {
  return a <= b ? a : b;
}
inline Rational max(const Rational& a, const Rational& b) {
  return a >= b ? a : b;
}

// Exact ceiling of a rational.
mpz_class ceil_rational(const Rational& x);

// If a (>= 0) has an exact rational b-th root, stores it in out and returns
// true. b must be >= 1.
bool exact_root(const Rational& a, unsigned long b, Rational& out);

// Sign of a^(1/b) + c^(1/b) - s^(1/b) for nonnegative rationals a, c, s.
//
// Equality is decided symbolically: real b-th roots of positive rationals
// that are not rational multiples of one another are linearly independent
// over the rationals, so a^(1/b) + c^(1/b) = s^(1/b) forces c/a to be an
// exact b-th power, say t^b, and then s = a*(1+t)^b. Once equality is ruled
// out, the strict comparison is settled by interval refinement with dyadic
// bounds on each root, which terminates because the gap is nonzero.
int compare_root_sum(const Rational& a, const Rational& c, const Rational& s,
                     unsigned long b);

}  // namespace unilab
