#include "unilab/group.hpp"

#include <algorithm>
#include <numeric>

namespace unilab {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table,
                         std::optional<std::vector<std::string>> names)
    : n_(static_cast<int>(table.size())), names_(std::move(names)) {
  if (n_ < 1 || n_ > kMaxCarrierSize)
    fail(ErrorCode::InvalidGroup, "table size out of range");
  table_.reserve(static_cast<size_t>(n_) * n_);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n_)
      fail(ErrorCode::InvalidGroup, "table is not square");
    for (int v : row) {
      if (v < 0 || v >= n_)
        fail(ErrorCode::InvalidGroup, "table entry out of range");
      table_.push_back(v);
    }
  }
  if (names_ && static_cast<int>(names_->size()) != n_)
    fail(ErrorCode::InvalidGroup, "name count does not match size");

  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail(ErrorCode::InvalidGroup,
               "associativity fails at (" + std::to_string(a) + "," +
                   std::to_string(b) + "," + std::to_string(c) + ")");

  identity_ = -1;
  for (int e = 0; e < n_; ++e) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x)
      if (mul(e, x) != x || mul(x, e) != x) ok = false;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) fail(ErrorCode::InvalidGroup, "no identity element");

  inverses_.assign(n_, -1);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y)
      if (mul(x, y) == identity_ && mul(y, x) == identity_) {
        inverses_[x] = y;
        break;
      }
    if (inverses_[x] < 0)
      fail(ErrorCode::InvalidGroup,
           "no inverse for element " + std::to_string(x));
  }
}

FiniteSpace FiniteGroup::space() const {
  if (names_) return FiniteSpace(n_, *names_);
  return FiniteSpace(n_);
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6)
    fail(ErrorCode::InvalidArgument, "supported degrees are 1 through 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int order = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) -
                            perms.begin());
  };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<std::string> names(order);
  for (int i = 0; i < order; ++i) {
    std::string name;
    for (int v : perms[i]) name += std::to_string(v);
    names[i] = name;
    for (int j = 0; j < order; ++j) {
      // (p * q)(k) = p[q[k]]: apply q first.
      std::vector<int> r(n);
      for (int k = 0; k < n; ++k) r[k] = perms[i][perms[j][k]];
      table[i][j] = index_of(r);
    }
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "order must be positive");
  int order = 2 * n;
  // Element i + n*j is r^i s^j with s r = r^{-1} s.
  auto idx = [&](int i, int j) { return ((i % n + n) % n) + n * (j % 2); };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<std::string> names(order);
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1) {
      names[idx(i1, j1)] =
          "r" + std::to_string(i1) + (j1 ? "s" : "");
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 ? i1 - i2 : i1 + i2;
          table[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 + j2);
        }
    }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::quaternion8() {
  // Elements 1, -1, i, -i, j, -j, k, -k.
  // Symbol products: s1 * s2 = sign * symbol.
  static const int sym_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sym_sign[4][4] = {
      {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  // Row/column order of symbols: 1, i, j, k. sym_sign[a][b] is the sign of
  // symbol_a * symbol_b, e.g. i*j = +k, j*i = -k, i*i = -1.
  auto enc = [](int sym, int sign) { return 2 * sym + (sign < 0 ? 1 : 0); };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sa = a / 2, ga = a % 2 ? -1 : 1;
      int sb = b / 2, gb = b % 2 ? -1 : 1;
      int sym = sym_mul[sa][sb];
      int sign = sym_sign[sa][sb] * ga * gb;
      table[a][b] = enc(sym, sign);
    }
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup(std::move(table), std::move(names));
}

namespace {

void check_subset(const FiniteGroup& g, const ElementSet& a) {
  if (a.carrier_size() != g.size())
    fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
}

void check_relation(const FiniteGroup& g, const Relation& u) {
  if (u.size() != g.size())
    fail(ErrorCode::SpaceMismatch, "relation over a different carrier");
}

}  // namespace

ElementSet set_product(const FiniteGroup& g, const ElementSet& a,
                       const ElementSet& b) {
  check_subset(g, a);
  check_subset(g, b);
  ElementSet out(g.size());
  for (int x : a.indices())
    for (int y : b.indices()) out.set(g.mul(x, y));
  return out;
}

ElementSet set_inverse(const FiniteGroup& g, const ElementSet& a) {
  check_subset(g, a);
  ElementSet out(g.size());
  for (int x : a.indices()) out.set(g.inv(x));
  return out;
}

ElementSet conjugate_subset(const FiniteGroup& g, int x, const ElementSet& a) {
  check_subset(g, a);
  if (x < 0 || x >= g.size())
    fail(ErrorCode::IndexOutOfRange, "conjugator outside the group");
  ElementSet out(g.size());
  for (int y : a.indices()) out.set(g.mul(g.mul(x, y), g.inv(x)));
  return out;
}

Relation relation_left(const FiniteGroup& g, const ElementSet& a) {
  check_subset(g, a);
  Relation u(g.space());
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (a.test(g.mul(g.inv(x), y))) u.set(x, y);
  return u;
}

Relation relation_right(const FiniteGroup& g, const ElementSet& a) {
  check_subset(g, a);
  Relation u(g.space());
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (a.test(g.mul(y, g.inv(x)))) u.set(x, y);
  return u;
}

InvarianceReport invariance(const FiniteGroup& g, const Relation& u) {
  check_relation(g, u);
  InvarianceReport out;
  ElementSet at_identity = u.row(g.identity());
  out.left = u == relation_left(g, at_identity);
  out.right = u == relation_right(g, at_identity);
  out.conjugation = true;
  for (int c = 0; c < g.size() && out.conjugation; ++c)
    for (int x = 0; x < g.size() && out.conjugation; ++x)
      for (int y = 0; y < g.size(); ++y) {
        if (!u.test(x, y)) continue;
        int cx = g.mul(g.mul(c, x), g.inv(c));
        int cy = g.mul(g.mul(c, y), g.inv(c));
        if (!u.test(cx, cy)) {
          out.conjugation = false;
          break;
        }
      }
  return out;
}

ElementSet subset_from_invariant(const FiniteGroup& g, const Relation& u) {
  check_relation(g, u);
  ElementSet a = u.row(g.identity());
  if (!(u == relation_left(g, a)))
    fail(ErrorCode::NotInvariant, "relation is not left-invariant");
  return a;
}

SubgroupReport subgroup_check(const FiniteGroup& g, const ElementSet& a) {
  check_subset(g, a);
  SubgroupReport out;
  if (!a.test(g.identity())) return out;
  Relation al = relation_left(g, a);
  if (!classify(al).is_equivalence()) return out;
  out.is_subgroup = true;
  out.is_normal = al == relation_right(g, a);
  return out;
}

GeneratedSubgroup generated_subgroup(const FiniteGroup& g,
                                     const ElementSet& w) {
  check_subset(g, w);
  GeneratedSubgroup out{ElementSet(g.size()), false};
  ElementSet seed = w;
  seed.set(g.identity());
  seed |= set_inverse(g, seed);
  out.input_symmetrized = !(seed == w);
  // Doubling fixpoint: with the identity inside, products only grow.
  ElementSet cur = seed;
  while (true) {
    ElementSet next = set_product(g, cur, cur);
    if (next == cur) break;
    cur = next;
  }
  out.subgroup = cur;
  return out;
}

LeftCore left_core(const FiniteGroup& g, const Relation& u) {
  check_relation(g, u);
  Relation core(g.space());
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y) {
      bool all = true;
      for (int c = 0; c < g.size(); ++c)
        if (!u.test(g.mul(c, x), g.mul(c, y))) {
          all = false;
          break;
        }
      if (all) core.set(x, y);
    }
  return {core, core.row(g.identity())};
}

namespace {

GroupUniformity build_group_uniformity(
    const FiniteGroup& g, const std::vector<ElementSet>& family, bool left) {
  if (family.empty()) fail(ErrorCode::EmptyList, "empty family");
  for (const auto& w : family) {
    if (w.carrier_size() != g.size())
      fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
    if (!w.test(g.identity()))
      fail(ErrorCode::InvalidFilterBase,
           "a member does not contain the identity");
  }
  std::vector<ElementSet> closed;
  for (const auto& w : family) {
    bool seen = false;
    for (const auto& o : closed)
      if (o == w) {
        seen = true;
        break;
      }
    if (!seen) closed.push_back(w);
  }
  size_t given = closed.size();
  for (size_t i = 0; i < closed.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      ElementSet meet = closed[i] & closed[j];
      bool seen = false;
      for (const auto& o : closed)
        if (o == meet) {
          seen = true;
          break;
        }
      if (!seen) closed.push_back(meet);
    }
  int augmented = static_cast<int>(closed.size() - given);

  ElementSet minimal = closed.front();
  for (const auto& w : closed) minimal &= w;
  if (!set_product(g, minimal, minimal).is_subset_of(minimal))
    fail(ErrorCode::NoSquareRoot,
         "the smallest member is not closed under products, so no member "
         "can satisfy the square-root axiom");

  std::vector<Relation> members;
  for (const auto& w : closed)
    members.push_back(left ? relation_left(g, w) : relation_right(g, w));
  return {UniformityBase(std::move(members)), augmented};
}

}  // namespace

GroupUniformity left_uniformity_base(const FiniteGroup& g,
                                     const std::vector<ElementSet>& family) {
  return build_group_uniformity(g, family, true);
}

GroupUniformity right_uniformity_base(const FiniteGroup& g,
                                      const std::vector<ElementSet>& family) {
  return build_group_uniformity(g, family, false);
}

std::vector<ElementSet> left_cosets(const FiniteGroup& g,
                                    const ElementSet& subgroup) {
  if (!subgroup_check(g, subgroup).is_subgroup)
    fail(ErrorCode::NotSubgroup, "cosets need a subgroup");
  std::vector<ElementSet> out;
  ElementSet remaining = ElementSet::all(g.size());
  while (!remaining.empty()) {
    int x = remaining.first();
    ElementSet coset(g.size());
    for (int h : subgroup.indices()) coset.set(g.mul(x, h));
    remaining = remaining.minus(coset);
    out.push_back(std::move(coset));
  }
  return out;
}

namespace {

ElementSet family_intersection(const FiniteGroup& g,
                               const std::vector<ElementSet>& family) {
  if (family.empty()) fail(ErrorCode::EmptyList, "empty family");
  for (const auto& a : family) {
    if (a.carrier_size() != g.size())
      fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
    if (!subgroup_check(g, a).is_subgroup)
      fail(ErrorCode::NotSubgroup, "family member is not a subgroup");
  }
  for (const auto& a : family)
    for (int x = 0; x < g.size(); ++x) {
      ElementSet conj = conjugate_subset(g, x, a);
      bool found = false;
      for (const auto& b : family)
        if (b.is_subset_of(conj)) {
          found = true;
          break;
        }
      if (!found)
        fail(ErrorCode::NotConjugationCompatible,
             "no member sits inside a conjugate of member");
    }
  ElementSet total = family.front();
  for (const auto& a : family) total &= a;
  return total;
}

}  // namespace

Topology subgroup_topology(const FiniteGroup& g,
                           const std::vector<ElementSet>& family,
                           int max_cosets) {
  ElementSet core = family_intersection(g, family);
  auto cosets = left_cosets(g, core);
  int k = static_cast<int>(cosets.size());
  if (k > std::min(max_cosets, 16))
    fail(ErrorCode::SpaceTooLargeForEnumeration,
         std::to_string(k) + " cosets exceed the enumeration cap");
  if (g.size() > 32)
    fail(ErrorCode::SpaceTooLargeForEnumeration,
         "carrier too large for mask representation");
  std::vector<uint32_t> coset_masks;
  for (const auto& c : cosets) coset_masks.push_back(c.mask32());
  std::vector<uint32_t> opens;
  for (uint32_t pick = 0; pick < (uint32_t(1) << k); ++pick) {
    uint32_t u = 0;
    for (int i = 0; i < k; ++i)
      if ((pick >> i) & 1) u |= coset_masks[i];
    opens.push_back(u);
  }
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return Topology(g.space(), std::move(opens));
}

bool subgroups_hausdorff(const FiniteGroup& g,
                         const std::vector<ElementSet>& family) {
  ElementSet core = family_intersection(g, family);
  return core.count() == 1 && core.test(g.identity());
}

InvarianceReport semimetric_invariance(const FiniteGroup& g,
                                       const SemiMetric& d) {
  if (d.size() != g.size())
    fail(ErrorCode::SpaceMismatch, "matrix over a different carrier");
  InvarianceReport out{true, true, true};
  for (int c = 0; c < g.size(); ++c)
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y) {
        const Rational& base = d.at(x, y);
        if (out.left && !(d.at(g.mul(c, x), g.mul(c, y)) == base))
          out.left = false;
        if (out.right && !(d.at(g.mul(x, c), g.mul(y, c)) == base))
          out.right = false;
        if (out.conjugation &&
            !(d.at(g.mul(g.mul(c, x), g.inv(c)),
                   g.mul(g.mul(c, y), g.inv(c))) == base))
          out.conjugation = false;
        if (!out.left && !out.right && !out.conjugation) return out;
      }
  return out;
}

}  // namespace unilab
