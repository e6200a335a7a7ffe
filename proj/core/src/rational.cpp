#include "unilab/rational.hpp"

#include <cctype>

namespace unilab {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::NotReflexiveSymmetric: return "NotReflexiveSymmetric";
    case ErrorCode::NotEquivalence: return "NotEquivalence";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidSemiMetric: return "InvalidSemiMetric";
    case ErrorCode::InexactPower: return "InexactPower";
    case ErrorCode::MapOutOfRange: return "MapOutOfRange";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::InvalidSubbase: return "InvalidSubbase";
    case ErrorCode::SpaceTooLargeForEnumeration:
      return "SpaceTooLargeForEnumeration";
    case ErrorCode::ProductTooLarge: return "ProductTooLarge";
    case ErrorCode::NotOpen: return "NotOpen";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::DuplicateSample: return "DuplicateSample";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::InvalidFilterBase: return "InvalidFilterBase";
    case ErrorCode::NoSquareRoot: return "NoSquareRoot";
    case ErrorCode::NotConjugationCompatible:
      return "NotConjugationCompatible";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "UnknownError";
}

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) fail(ErrorCode::ParseError, "empty rational literal");
  // mpq_class accepts more than we want (whitespace, hex); keep it strict.
  size_t slash = text.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    size_t i = 0;
    if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  bool ok;
  if (slash == std::string::npos) {
    ok = check_int(text, true);
  } else {
    ok = check_int(text.substr(0, slash), true) &&
         check_int(text.substr(slash + 1), false);
  }
  if (!ok) fail(ErrorCode::ParseError, "bad rational literal: " + text);
  mpq_class v;
  // GMP itself does not take a leading plus sign.
  const std::string clean = text[0] == '+' ? text.substr(1) : text;
  if (v.set_str(clean, 10) != 0)
    fail(ErrorCode::ParseError, "bad rational literal: " + text);
  if (v.get_den() == 0)
    fail(ErrorCode::ParseError, "zero denominator: " + text);
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  bool neg = e < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-(e + 1)) + 1
                        : static_cast<unsigned long>(e);
  if (neg && is_zero())
    fail(ErrorCode::InvalidArgument, "negative power of zero");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  mpq_class r;
  if (neg) {
    r = mpq_class(den, num);
  } else {
    r = mpq_class(num, den);
  }
  r.canonicalize();
  return Rational(std::move(r));
}

mpz_class ceil_rational(const Rational& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

bool exact_root(const Rational& a, unsigned long b, Rational& out) {
  if (a.is_negative())
    fail(ErrorCode::InvalidArgument, "root of a negative rational");
  if (b == 0) fail(ErrorCode::InvalidArgument, "zeroth root");
  if (b == 1 || a.is_zero() || a == Rational(1)) {
    out = a;
    return true;
  }
  mpz_class rn, rd;
  int num_exact = mpz_root(rn.get_mpz_t(), a.num().get_mpz_t(), b);
  if (num_exact == 0) return false;
  int den_exact = mpz_root(rd.get_mpz_t(), a.den().get_mpz_t(), b);
  if (den_exact == 0) return false;
  mpq_class r(rn, rd);
  r.canonicalize();
  out = Rational(std::move(r));
  return true;
}

namespace {

// Dyadic bounds l/2^k <= x^(1/b) <= u/2^k with u - l <= 2.
void root_bounds(const Rational& x, unsigned long b, unsigned long k,
                 mpz_class& lo, mpz_class& hi) {
  // n = floor(x * 2^(b*k)), r = floor(n^(1/b)); then r <= x^(1/b) * 2^k
  // and x^(1/b) * 2^k < r + 2.
  mpz_class scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), x.num().get_mpz_t(), b * k);
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());
  mpz_class r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), b);
  lo = r;
  hi = r + 2;
}

}  // namespace

int compare_root_sum(const Rational& a, const Rational& c, const Rational& s,
                     unsigned long b) {
  if (a.is_negative() || c.is_negative() || s.is_negative())
    fail(ErrorCode::InvalidArgument, "root comparison of a negative rational");
  if (b == 0) fail(ErrorCode::InvalidArgument, "zeroth root");
  auto sign3 = [](const Rational& u, const Rational& v) {
    if (u < v) return -1;
    if (u == v) return 0;
    return 1;
  };
  if (b == 1) return sign3(a + c, s);
  if (s.is_zero()) return (a.is_zero() && c.is_zero()) ? 0 : 1;
  if (a.is_zero()) return sign3(c, s);
  if (c.is_zero()) return sign3(a, s);
  // All three positive. If either summand's root already reaches s^(1/b),
  // the sum is strictly larger.
  if (a >= s || c >= s) return 1;

  // Equality is only possible when c/a is an exact b-th power (see header).
  Rational t;
  if (exact_root(c / a, b, t)) {
    Rational needed = (Rational(1) + t).pow_int(static_cast<long>(b)) * a;
    if (needed == s) return 0;
  }

  for (unsigned long k = 8; k <= 1u << 14; k *= 2) {
    mpz_class la, ha, lc, hc, ls, hs;
    root_bounds(a, b, k, la, ha);
    root_bounds(c, b, k, lc, hc);
    root_bounds(s, b, k, ls, hs);
    if (la + lc > hs) return 1;
    if (ha + hc < ls) return -1;
  }
  fail(ErrorCode::InvalidArgument, "root comparison did not converge");
}

}  // namespace unilab
