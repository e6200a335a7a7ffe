#include "unilab/relation.hpp"

#include <algorithm>

namespace unilab {

Relation Relation::diagonal(const FiniteSpace& space) {
  Relation r(space);
  for (int i = 0; i < space.size; ++i) r.set(i, i);
  return r;
}

Relation Relation::full(const FiniteSpace& space) {
  Relation r(space);
  for (int i = 0; i < space.size; ++i)
    for (int w = 0; w < r.words_; ++w)
      r.bits_[static_cast<size_t>(i) * r.words_ + w] = ~uint64_t(0);
  int rem = space.size & 63;
  if (rem) {
    uint64_t mask = (uint64_t(1) << rem) - 1;
    for (int i = 0; i < space.size; ++i)
      r.bits_[static_cast<size_t>(i) * r.words_ + (r.words_ - 1)] &= mask;
  }
  return r;
}

Relation Relation::from_pairs(const FiniteSpace& space,
                              const std::vector<std::pair<int, int>>& pairs) {
  Relation r(space);
  for (auto [i, j] : pairs) {
    r.check_index(i);
    r.check_index(j);
    r.set(i, j);
  }
  return r;
}

Relation Relation::complement() const {
  Relation r(space_);
  for (size_t k = 0; k < bits_.size(); ++k) r.bits_[k] = ~bits_[k];
  int rem = size() & 63;
  if (rem) {
    uint64_t mask = (uint64_t(1) << rem) - 1;
    for (int i = 0; i < size(); ++i)
      r.bits_[static_cast<size_t>(i) * words_ + (words_ - 1)] &= mask;
  }
  return r;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (test(i, j)) out.emplace_back(i, j);
  return out;
}

Relation inverse(const Relation& u) {
  Relation r(u.space());
  int n = u.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (u.test(i, j)) r.set(j, i);
  return r;
}

Relation compose(const Relation& u, const Relation& v) {
  if (u.size() != v.size())
    fail(ErrorCode::SpaceMismatch, "composing relations over different carriers");
  int n = u.size();
  int words = u.words_per_row();
  Relation r(u.space());
  for (int i = 0; i < n; ++i) {
    uint64_t* out = r.row_data(i);
    for (int w = 0; w < words; ++w) {
      uint64_t bits = u.row_word(i, w);
      while (bits) {
        int j = (w << 6) + __builtin_ctzll(bits);
        bits &= bits - 1;
        for (int t = 0; t < words; ++t) out[t] |= v.row_word(j, t);
      }
    }
  }
  return r;
}

ElementSet image(const Relation& u, const ElementSet& a) {
  if (a.carrier_size() != u.size())
    fail(ErrorCode::SpaceMismatch,
         "subset carrier does not match the relation");
  ElementSet out(u.size());
  int words = u.words_per_row();
  for (int i = 0; i < u.size(); ++i) {
    if (!a.test(i)) continue;
    for (int w = 0; w < words; ++w) out.words_ref()[w] |= u.row_word(i, w);
  }
  return out;
}

RelationClassification classify(const Relation& u) {
  RelationClassification c;
  int n = u.size();
  c.reflexive = true;
  for (int i = 0; i < n; ++i)
    if (!u.test(i, i)) {
      c.reflexive = false;
      break;
    }
  c.symmetric = true;
  for (int i = 0; i < n && c.symmetric; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u.test(i, j) != u.test(j, i)) {
        c.symmetric = false;
        break;
      }
  c.transitive = compose(u, u).is_subset_of(u);
  return c;
}

namespace {

void require_reflexive_symmetric(const Relation& u, const char* what) {
  auto c = classify(u);
  if (!c.reflexive || !c.symmetric)
    fail(ErrorCode::NotReflexiveSymmetric,
         std::string(what) + " requires a reflexive symmetric relation");
}

}  // namespace

Relation power(const Relation& u, long n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative relation power");
  require_reflexive_symmetric(u, "power");
  if (n == 0) return Relation::diagonal(u.space());
  long cap = u.size() - 1;
  if (cap < 1) cap = 1;
  long e = std::min(n, cap);
  // For reflexive U the powers are increasing, so U^e = U^(2^ceil(log2 e))
  // truncated by repeated squaring with a final multiply chain. Binary
  // exponentiation keeps the count of compositions logarithmic.
  Relation result = Relation::diagonal(u.space());
  Relation base = u;
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    e >>= 1;
    if (e) base = compose(base, base);
  }
  return result;
}

Relation equivalence_closure(const Relation& u) {
  require_reflexive_symmetric(u, "equivalence closure");
  Relation w = u;
  // Reflexivity makes W <= W*W, so repeated squaring reaches the fixpoint.
  while (true) {
    Relation next = compose(w, w);
    if (next == w) return w;
    w = next;
  }
}

Relation symmetrize(const Relation& u) { return u & inverse(u); }

std::vector<ElementSet> equivalence_classes(const Relation& u) {
  auto c = classify(u);
  if (!c.is_equivalence())
    fail(ErrorCode::NotEquivalence, "relation is not an equivalence");
  int n = u.size();
  std::vector<ElementSet> blocks;
  ElementSet seen(n);
  for (int i = 0; i < n; ++i) {
    if (seen.test(i)) continue;
    ElementSet block = u.row(i);
    seen |= block;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Relation relation_from_partition(const FiniteSpace& space,
                                 const std::vector<ElementSet>& blocks) {
  ElementSet seen(space.size);
  for (const auto& b : blocks) {
    if (b.carrier_size() != space.size)
      fail(ErrorCode::InvalidPartition, "block carrier does not match space");
    if (b.empty()) fail(ErrorCode::InvalidPartition, "empty block");
    if (seen.intersects(b)) fail(ErrorCode::InvalidPartition, "blocks overlap");
    seen |= b;
  }
  if (!(seen == ElementSet::all(space.size)))
    fail(ErrorCode::InvalidPartition, "blocks do not cover the carrier");
  Relation r(space);
  for (const auto& b : blocks) {
    auto members = b.indices();
    for (int i : members)
      for (int j : members) r.set(i, j);
  }
  return r;
}

Relation split_relation(const FiniteSpace& space, const ElementSet& a) {
  if (a.carrier_size() != space.size)
    fail(ErrorCode::SpaceMismatch, "subset carrier does not match space");
  Relation r(space);
  for (int i = 0; i < space.size; ++i) {
    bool in_a = a.test(i);
    for (int j = 0; j < space.size; ++j)
      if (a.test(j) == in_a) r.set(i, j);
  }
  return r;
}

}  // namespace unilab
