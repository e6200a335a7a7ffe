#include "unilab/semimetric.hpp"

#include <algorithm>
#include <set>

namespace unilab {

QParam QParam::parse(const std::string& text) {
  if (text == "inf") return inf();
  if (text.rfind("q:", 0) == 0)
    return finite(Rational::parse(text.substr(2)));
  fail(ErrorCode::ParseError, "bad level literal: " + text);
}

namespace {

// Weakest of two levels: finite beats infinite, smaller q beats larger.
QParam level_meet(const QParam& a, const QParam& b) {
  if (a.is_inf()) return b;
  if (b.is_inf()) return a;
  return a.q() <= b.q() ? a : b;
}

// d(x,z) <= bound(d(x,y), d(y,z)) at the given level, exactly.
bool triangle_holds(const Rational& xz, const Rational& xy, const Rational& yz,
                    const QParam& level) {
  if (level.is_inf()) return xz <= max(xy, yz);
  const Rational& q = level.q();
  if (q.is_integer()) {
    long e = q.num().get_si();
    return xz.pow_int(e) <= xy.pow_int(e) + yz.pow_int(e);
  }
  // q = a/b with b > 1: compare b-th roots of the a-th powers.
  long a = q.num().get_si();
  unsigned long b = q.den().get_ui();
  Rational xya = xy.pow_int(a);
  Rational yza = yz.pow_int(a);
  Rational xza = xz.pow_int(a);
  return compare_root_sum(xya, yza, xza, b) >= 0;
}

}  // namespace

MetricValidation validate_semimetric(
    const std::vector<std::vector<Rational>>& values, const QParam& level) {
  MetricValidation out;
  size_t n = values.size();
  if (n == 0) {
    out.shape_ok = false;
    out.shape_issues.push_back("empty matrix");
    return out;
  }
  for (size_t i = 0; i < n; ++i)
    if (values[i].size() != n) {
      out.shape_ok = false;
      out.shape_issues.push_back("matrix is not square");
      return out;
    }
  for (size_t i = 0; i < n; ++i) {
    if (!values[i][i].is_zero()) {
      out.shape_ok = false;
      out.shape_issues.push_back("nonzero diagonal at " + std::to_string(i));
    }
    for (size_t j = 0; j < n; ++j) {
      if (values[i][j].is_negative()) {
        out.shape_ok = false;
        out.shape_issues.push_back("negative entry at (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
      }
      if (j > i && !(values[i][j] == values[j][i])) {
        out.shape_ok = false;
        out.shape_issues.push_back("asymmetry at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
      }
    }
  }
  if (!out.shape_ok) return out;

  for (size_t x = 0; x < n; ++x)
    for (size_t z = x + 1; z < n; ++z)
      for (size_t y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        if (!triangle_holds(values[x][z], values[x][y], values[y][z], level))
          out.violations.push_back({static_cast<int>(x), static_cast<int>(y),
                                    static_cast<int>(z)});
      }

  out.is_metric = out.violations.empty();
  if (out.is_metric)
    for (size_t i = 0; i < n && out.is_metric; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (values[i][j].is_zero()) {
          out.is_metric = false;
          break;
        }
  return out;
}

SemiMetric::SemiMetric(FiniteSpace space, QParam level,
                       std::vector<std::vector<Rational>> values)
    : space_(std::move(space)), level_(level) {
  if (static_cast<int>(values.size()) != space_.size)
    fail(ErrorCode::ShapeMismatch, "matrix size does not match carrier");
  auto report = validate_semimetric(values, level_);
  if (!report.valid()) {
    std::string msg = "matrix fails validation";
    if (!report.shape_issues.empty())
      msg += ": " + report.shape_issues.front();
    else if (!report.violations.empty()) {
      const auto& v = report.violations.front();
      msg += ": inequality fails at (" + std::to_string(v.x) + "," +
             std::to_string(v.y) + "," + std::to_string(v.z) + ")";
    }
    fail(ErrorCode::InvalidSemiMetric, msg);
  }
  values_.reserve(static_cast<size_t>(space_.size) * space_.size);
  for (auto& row : values)
    for (auto& v : row) values_.push_back(std::move(v));
}

SemiMetric::SemiMetric(FiniteSpace space, QParam level,
                       std::vector<Rational> flat, bool)
    : space_(std::move(space)), level_(level), values_(std::move(flat)) {}

SemiMetric SemiMetric::zero(FiniteSpace space, QParam level) {
  int n = space.size;
  return SemiMetric(std::move(space), level,
                    std::vector<Rational>(static_cast<size_t>(n) * n), true);
}

SemiMetric SemiMetric::discrete(FiniteSpace space) {
  int n = space.size;
  std::vector<Rational> flat(static_cast<size_t>(n) * n, Rational(1));
  for (int i = 0; i < n; ++i) flat[static_cast<size_t>(i) * n + i] = Rational(0);
  return SemiMetric(std::move(space), QParam::inf(), std::move(flat), true);
}

bool SemiMetric::is_metric() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (at(i, j).is_zero()) return false;
  return true;
}

std::vector<Rational> SemiMetric::canonical_radii() const {
  std::set<Rational> positive;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (at(i, j).sign() > 0) positive.insert(at(i, j));
  if (positive.empty()) return {Rational(1)};
  std::vector<Rational> out(positive.begin(), positive.end());
  out.push_back(out.back() + Rational(1));
  return out;
}

Relation entourage(const SemiMetric& d, const Rational& r) {
  if (r.sign() <= 0)
    fail(ErrorCode::InvalidArgument, "entourage radius must be positive");
  Relation u(d.space());
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j)
      if (d.at(i, j) < r) u.set(i, j);
  return u;
}

ElementSet ball(const SemiMetric& d, int center, const Rational& r,
                bool closed) {
  if (center < 0 || center >= d.size())
    fail(ErrorCode::IndexOutOfRange, "ball center outside carrier");
  ElementSet out(d.size());
  for (int j = 0; j < d.size(); ++j) {
    const Rational& v = d.at(center, j);
    if (closed ? v <= r : v < r) out.set(j);
  }
  return out;
}

SemiMetric truncate(const SemiMetric& d, const Rational& t) {
  if (t.sign() <= 0)
    fail(ErrorCode::InvalidArgument, "truncation threshold must be positive");
  std::vector<Rational> flat;
  flat.reserve(static_cast<size_t>(d.size()) * d.size());
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j) flat.push_back(min(d.at(i, j), t));
  return SemiMetric(d.space(), d.level(), std::move(flat), true);
}

SemiMetric max_combine(const std::vector<SemiMetric>& ds) {
  if (ds.empty()) fail(ErrorCode::EmptyList, "max of no matrices");
  const auto& first = ds.front();
  QParam level = first.level();
  for (const auto& d : ds) {
    if (d.size() != first.size())
      fail(ErrorCode::SpaceMismatch, "combining matrices over different carriers");
    level = level_meet(level, d.level());
  }
  std::vector<Rational> flat;
  flat.reserve(static_cast<size_t>(first.size()) * first.size());
  for (int i = 0; i < first.size(); ++i)
    for (int j = 0; j < first.size(); ++j) {
      Rational m = ds[0].at(i, j);
      for (size_t k = 1; k < ds.size(); ++k) m = max(m, ds[k].at(i, j));
      flat.push_back(std::move(m));
    }
  return SemiMetric(first.space(), level, std::move(flat), true);
}

SemiMetric sequence_combine(const std::vector<SemiMetric>& ds,
                            const FiniteSpace& space) {
  for (const auto& d : ds)
    if (d.size() != space.size)
      fail(ErrorCode::SpaceMismatch, "combining matrices over different carriers");
  if (ds.empty()) return SemiMetric::zero(space);
  QParam level = ds.front().level();
  for (const auto& d : ds) level = level_meet(level, d.level());
  int n = space.size;
  std::vector<Rational> flat(static_cast<size_t>(n) * n, Rational(0));
  for (size_t k = 0; k < ds.size(); ++k) {
    Rational cutoff(1, static_cast<long>(k) + 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational v = min(ds[k].at(i, j), cutoff);
        auto& slot = flat[static_cast<size_t>(i) * n + j];
        slot = max(slot, v);
      }
  }
  return SemiMetric(space, level, std::move(flat), true);
}

SemiMetric power_transform(const SemiMetric& d, const Rational& q) {
  if (q.sign() <= 0)
    fail(ErrorCode::InvalidArgument, "power must be positive");
  int n = d.size();
  std::vector<Rational> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  bool q_int = q.is_integer();
  long a = 0;
  unsigned long b = 1;
  if (q_int) {
    a = q.num().get_si();
  } else {
    a = q.num().get_si();
    b = q.den().get_ui();
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& v = d.at(i, j);
      Rational powered = v.pow_int(a);
      if (q_int) {
        flat.push_back(std::move(powered));
        continue;
      }
      Rational root;
      if (!exact_root(powered, b, root))
        fail(ErrorCode::InexactPower,
             "entry (" + std::to_string(i) + "," + std::to_string(j) +
                 ") = " + v.str() + " has no exact power " + q.str());
      flat.push_back(std::move(root));
    }
  QParam level = d.level().is_inf() ? QParam::inf()
                                    : QParam::finite(d.level().q() / q);
  return SemiMetric(d.space(), level, std::move(flat), true);
}

SemiMetric pullback(const SemiMetric& target, const std::vector<int>& f,
                    const FiniteSpace& source) {
  if (static_cast<int>(f.size()) != source.size)
    fail(ErrorCode::MapOutOfRange, "map length does not match source carrier");
  for (int v : f)
    if (v < 0 || v >= target.size())
      fail(ErrorCode::MapOutOfRange,
           "map value " + std::to_string(v) + " outside target carrier");
  int n = source.size;
  std::vector<Rational> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat.push_back(target.at(f[i], f[j]));
  return SemiMetric(source, target.level(), std::move(flat), true);
}

SemiMetric discrete_from_partition(const FiniteSpace& space,
                                   const std::vector<ElementSet>& blocks) {
  Relation same = relation_from_partition(space, blocks);
  int n = space.size;
  std::vector<Rational> flat(static_cast<size_t>(n) * n, Rational(1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (same.test(i, j)) flat[static_cast<size_t>(i) * n + j] = Rational(0);
  return SemiMetric(space, QParam::inf(), std::move(flat), true);
}

}  // namespace unilab
