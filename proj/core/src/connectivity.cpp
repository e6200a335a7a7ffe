#include "unilab/connectivity.hpp"

#include <algorithm>
#include <deque>

namespace unilab {

bool separated_by(const ElementSet& a, const ElementSet& b,
                  const Relation& u) {
  if (a.carrier_size() != u.size() || b.carrier_size() != u.size())
    fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
  if (!classify(u).reflexive)
    fail(ErrorCode::NotReflexive, "separation needs a reflexive relation");
  return !image(u, a).intersects(b);
}

std::optional<Relation> uniformly_separated(const ElementSet& a,
                                            const ElementSet& b,
                                            const UniformityBase& base) {
  if (a.carrier_size() != base.size() || b.carrier_size() != base.size())
    fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
  for (const auto& u : base.members())
    if (!image(u, a).intersects(b)) return u;
  return std::nullopt;
}

namespace {

void require_reflexive_symmetric(const Relation& u) {
  auto c = classify(u);
  if (!c.reflexive || !c.symmetric)
    fail(ErrorCode::NotReflexiveSymmetric,
         "chains need a reflexive symmetric relation");
}

}  // namespace

std::optional<std::vector<int>> find_chain(int x, int y, const Relation& u) {
  u.check_index(x);
  u.check_index(y);
  require_reflexive_symmetric(u);
  if (x == y) return std::vector<int>{x};
  int n = u.size();
  std::vector<int> parent(n, -1);
  std::deque<int> queue{x};
  parent[x] = x;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int next : u.row(cur).indices()) {
      if (parent[next] >= 0) continue;
      parent[next] = cur;
      if (next == y) {
        std::vector<int> chain;
        for (int p = y; p != x; p = parent[p]) chain.push_back(p);
        chain.push_back(x);
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

std::vector<ElementSet> chain_components(const ElementSet& e,
                                         const Relation& u) {
  if (e.carrier_size() != u.size())
    fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
  require_reflexive_symmetric(u);
  int n = u.size();
  std::vector<ElementSet> blocks;
  ElementSet remaining = e;
  while (!remaining.empty()) {
    int seed = remaining.first();
    ElementSet block(n);
    block.set(seed);
    // Grow within e until stable.
    while (true) {
      ElementSet grown = image(u, block);
      grown &= e;
      grown |= block;
      if (grown == block) break;
      block = grown;
    }
    remaining = remaining.minus(block);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

ChainConnectivity is_chain_connected(const ElementSet& e,
                                     const UniformityBase& base) {
  if (e.carrier_size() != base.size())
    fail(ErrorCode::SpaceMismatch, "subset over a different carrier");
  ChainConnectivity out;
  if (e.count() <= 1) return out;
  for (size_t idx = 0; idx < base.members().size(); ++idx) {
    Relation sym = symmetrize(base.members()[idx]);
    auto blocks = chain_components(e, sym);
    if (blocks.size() > 1) {
      out.connected = false;
      out.violating_member = static_cast<int>(idx);
      out.split = {blocks.front(), e.minus(blocks.front())};
      return out;
    }
  }
  return out;
}

std::optional<std::pair<ElementSet, ElementSet>> separated_split(
    const ElementSet& e, const UniformityBase& base) {
  auto res = is_chain_connected(e, base);
  if (res.connected) return std::nullopt;
  return res.split;
}

std::vector<ElementSet> self_separated_sets(const UniformityBase& base,
                                            int max_size) {
  int n = base.size();
  if (n > std::min(max_size, 20))
    fail(ErrorCode::SpaceTooLargeForEnumeration,
         "subset enumeration needs a carrier of size <= " +
             std::to_string(std::min(max_size, 20)));
  std::vector<ElementSet> out;
  uint32_t full = (uint32_t(1) << n) - 1;
  for (uint32_t m = 0;; ++m) {
    ElementSet a = ElementSet::from_mask32(n, m);
    if (contains(base, split_relation(base.space(), a))) out.push_back(a);
    if (m == full) break;
  }
  return out;
}

DimensionZeroReport dimension_zero_report(const UniformityBase& base,
                                          int max_size) {
  int n = base.size();
  DimensionZeroReport out;
  Topology topo = topology(base, max_size);
  auto self_sep = self_separated_sets(base, max_size);
  std::vector<uint32_t> sep_masks;
  for (const auto& s : self_sep) sep_masks.push_back(s.mask32());

  // Minimal open neighborhood of each point.
  uint32_t full = (uint32_t(1) << n) - 1;
  std::vector<uint32_t> min_open(n, full);
  for (uint32_t o : topo.open_masks())
    for (int x = 0; x < n; ++x)
      if ((o >> x) & 1) min_open[x] &= o;

  std::vector<uint32_t> clopen;
  for (uint32_t o : topo.open_masks())
    if (topo.is_open(full & ~o)) clopen.push_back(o);

  // Every member contains an equivalence relation of the uniformity.
  std::vector<Relation> eq_members;
  for (const auto& v : base.members())
    eq_members.push_back(equivalence_closure(symmetrize(v)));
  out.uniformly_zero_dimensional = true;
  for (const auto& u : base.members()) {
    bool found = false;
    for (const auto& v : eq_members)
      if (v.is_subset_of(u)) {
        found = true;
        break;
      }
    if (!found) {
      out.uniformly_zero_dimensional = false;
      break;
    }
  }

  auto has_witness = [](const std::vector<uint32_t>& pool, auto pred) {
    for (uint32_t c : pool)
      if (pred(c)) return true;
    return false;
  };

  // Small neighborhoods from the self-separated pool, then from clopens.
  out.strongly_zero_dimensional = true;
  out.topologically_zero_dimensional = true;
  for (int x = 0; x < n; ++x) {
    uint32_t bit = uint32_t(1) << x;
    if (!has_witness(sep_masks, [&](uint32_t c) {
          return (c & bit) && (c & ~min_open[x]) == 0;
        }))
      out.strongly_zero_dimensional = false;
    if (!has_witness(clopen, [&](uint32_t c) {
          return (c & bit) && (c & ~min_open[x]) == 0;
        }))
      out.topologically_zero_dimensional = false;
  }

  // Separating pairs of points.
  out.strongly_totally_separated = true;
  out.totally_separated = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      uint32_t bx = uint32_t(1) << x, by = uint32_t(1) << y;
      if (!has_witness(sep_masks, [&](uint32_t c) {
            return (c & bx) && !(c & by);
          }))
        out.strongly_totally_separated = false;
      if (!has_witness(clopen, [&](uint32_t c) {
            return (c & bx) && !(c & by);
          }))
        out.totally_separated = false;
    }

  Relation meet = Relation::full(base.space());
  for (const auto& u : base.members()) meet &= u;
  out.hausdorff = meet == Relation::diagonal(base.space());
  return out;
}

std::vector<Rational> rational_chain(const Rational& a, const Rational& b,
                                     const Rational& r) {
  if (r.sign() <= 0)
    fail(ErrorCode::InvalidArgument, "chain mesh must be positive");
  if (a == b) return {a};
  Rational step = r / Rational(2);
  Rational dist = (b - a).abs();
  mpz_class m = ceil_rational(dist / step);
  if (m > 10'000'000)
    fail(ErrorCode::InvalidArgument, "chain would have over 10^7 points");
  long count = m.get_si();
  Rational dir = b > a ? step : -step;
  std::vector<Rational> out;
  out.reserve(count + 1);
  for (long k = 0; k < count; ++k) out.push_back(a + dir * Rational(k));
  out.push_back(b);
  return out;
}

}  // namespace unilab
