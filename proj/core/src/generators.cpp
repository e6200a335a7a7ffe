#include "unilab/generators.hpp"

namespace unilab {

Relation random_relation(Rng& rng, const FiniteSpace& space, int percent) {
  Relation u(space);
  for (int i = 0; i < space.size; ++i)
    for (int j = 0; j < space.size; ++j)
      if (static_cast<int>(rng.next() % 100) < percent) u.set(i, j);
  return u;
}

Relation random_reflexive_symmetric(Rng& rng, const FiniteSpace& space,
                                    int percent) {
  Relation u = random_relation(rng, space, percent);
  u |= inverse(u);
  u |= Relation::diagonal(space);
  return u;
}

SemiMetric random_semimetric(Rng& rng, const FiniteSpace& space) {
  int n = space.size;
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational v(rng.uniform(0, 8), rng.uniform(1, 4));
      d[i][j] = v;
      d[j][i] = v;
    }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
  return SemiMetric(space, QParam::finite(Rational(1)), std::move(d));
}

namespace {

void laminar_fill(Rng& rng, std::vector<std::vector<Rational>>& d,
                  const std::vector<int>& members, int depth) {
  size_t m = members.size();
  if (m <= 1) return;
  int buckets = rng.uniform(2, 3);
  std::vector<std::vector<int>> split(buckets);
  for (int x : members) split[rng.uniform(0, buckets - 1)].push_back(x);
  // Keep the recursion productive: if everything landed together, move the
  // last element out.
  int nonempty = 0, only = -1;
  for (int b = 0; b < buckets; ++b)
    if (!split[b].empty()) {
      ++nonempty;
      only = b;
    }
  if (nonempty == 1) {
    int moved = split[only].back();
    split[only].pop_back();
    split[(only + 1) % buckets].push_back(moved);
  }
  Rational radius(1, depth + 1);
  for (int b1 = 0; b1 < buckets; ++b1)
    for (int b2 = b1 + 1; b2 < buckets; ++b2)
      for (int x : split[b1])
        for (int y : split[b2]) {
          d[x][y] = radius;
          d[y][x] = radius;
        }
  for (int b = 0; b < buckets; ++b) laminar_fill(rng, d, split[b], depth + 1);
}

}  // namespace

SemiMetric random_ultrametric(Rng& rng, const FiniteSpace& space) {
  int n = space.size;
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  laminar_fill(rng, d, all, 0);
  return SemiMetric(space, QParam::inf(), std::move(d));
}

std::vector<ElementSet> random_partition(Rng& rng, const FiniteSpace& space) {
  int n = space.size;
  int k = rng.uniform(1, n);
  std::vector<ElementSet> buckets(k, ElementSet(n));
  for (int i = 0; i < n; ++i) buckets[rng.uniform(0, k - 1)].set(i);
  std::vector<ElementSet> blocks;
  for (int i = 0; i < n; ++i) {
    for (const auto& b : buckets)
      if (b.test(i) && b.first() == i) blocks.push_back(b);
  }
  return blocks;
}

UniformityBase random_base(Rng& rng, const FiniteSpace& space) {
  switch (rng.uniform(0, 3)) {
    case 0:
      return base_from_semimetric(random_semimetric(rng, space));
    case 1:
      return base_from_semimetric(random_ultrametric(rng, space));
    case 2: {
      auto p1 = random_partition(rng, space);
      auto p2 = random_partition(rng, space);
      return base_from_subbase({relation_from_partition(space, p1),
                                relation_from_partition(space, p2)});
    }
    default: {
      // Entourage mixture. Including each matrix's smallest canonical
      // radius keeps the square-root axiom satisfiable: the zero-distance
      // entourage composes into itself.
      SemiMetric d1 = random_semimetric(rng, space);
      SemiMetric d2 = random_ultrametric(rng, space);
      auto r1 = d1.canonical_radii();
      auto r2 = d2.canonical_radii();
      std::vector<Relation> sub;
      sub.push_back(entourage(d1, r1.front()));
      sub.push_back(
          entourage(d1, r1[rng.uniform(0, static_cast<int>(r1.size()) - 1)]));
      sub.push_back(entourage(d2, r2.front()));
      sub.push_back(
          entourage(d2, r2[rng.uniform(0, static_cast<int>(r2.size()) - 1)]));
      return base_from_subbase(sub);
    }
  }
}

std::vector<int> random_map(Rng& rng, int source_size, int target_size) {
  std::vector<int> f(source_size);
  for (int& v : f) v = rng.uniform(0, target_size - 1);
  return f;
}

ElementSet random_subset(Rng& rng, int carrier) {
  ElementSet s(carrier);
  for (int i = 0; i < carrier; ++i)
    if (rng.coin()) s.set(i);
  return s;
}

}  // namespace unilab
