#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "unilab/finite_space.hpp"

namespace unilab {

struct RelationClassification {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool is_equivalence() const { return reflexive && symmetric && transitive; }
};

// Binary relation on a finite carrier, stored as a bit matrix (one bitset
// row per element).
class Relation {
 public:
  explicit Relation(FiniteSpace space)
      : space_(std::move(space)),
        words_(ElementSet::words(space_.size)),
        bits_(static_cast<size_t>(space_.size) * words_, 0) {}

  static Relation diagonal(const FiniteSpace& space);
  static Relation full(const FiniteSpace& space);
  static Relation from_pairs(const FiniteSpace& space,
                             const std::vector<std::pair<int, int>>& pairs);

  const FiniteSpace& space() const { return space_; }
  int size() const { return space_.size; }

  bool test(int i, int j) const {
    return (row_word(i, j >> 6) >> (j & 63)) & 1;
  }
  void set(int i, int j) {
    bits_[static_cast<size_t>(i) * words_ + (j >> 6)] |= uint64_t(1)
                                                         << (j & 63);
  }

  ElementSet row(int i) const {
    ElementSet r(size());
    for (int w = 0; w < words_; ++w) r.words_ref()[w] = row_word(i, w);
    return r;
  }

  bool is_subset_of(const Relation& o) const {
    check_same(o);
    for (size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] & ~o.bits_[k]) return false;
    return true;
  }

  Relation& operator&=(const Relation& o) {
    check_same(o);
    for (size_t k = 0; k < bits_.size(); ++k) bits_[k] &= o.bits_[k];
    return *this;
  }
  Relation& operator|=(const Relation& o) {
    check_same(o);
    for (size_t k = 0; k < bits_.size(); ++k) bits_[k] |= o.bits_[k];
    return *this;
  }
  friend Relation operator&(Relation a, const Relation& b) { return a &= b; }
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  Relation complement() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.space_.size == b.space_.size && a.bits_ == b.bits_;
  }

  bool empty() const {
    for (uint64_t w : bits_) if (w) return false;
    return true;
  }

  std::vector<std::pair<int, int>> pairs() const;

  uint64_t row_word(int i, int w) const {
    return bits_[static_cast<size_t>(i) * words_ + w];
  }
  uint64_t* row_data(int i) {
    return bits_.data() + static_cast<size_t>(i) * words_;
  }
  int words_per_row() const { return words_; }

  void check_index(int i) const {
    if (i < 0 || i >= size())
      fail(ErrorCode::IndexOutOfRange,
           "element " + std::to_string(i) + " outside carrier of size " +
               std::to_string(size()));
  }

 private:
  void check_same(const Relation& o) const {
    if (space_.size != o.space_.size)
      fail(ErrorCode::SpaceMismatch, "relations over different carriers");
  }

  FiniteSpace space_;
  int words_;
  std::vector<uint64_t> bits_;
};

Relation inverse(const Relation& u);
Relation compose(const Relation& u, const Relation& v);

// U[A] = { y : (x, y) in U for some x in A }.
ElementSet image(const Relation& u, const ElementSet& a);

RelationClassification classify(const Relation& u);

// U^n for reflexive symmetric U, with U^0 the diagonal. Stabilizes at the
// equivalence closure once n >= size - 1.
Relation power(const Relation& u, long n);

// Smallest equivalence relation containing a reflexive symmetric relation.
Relation equivalence_closure(const Relation& u);

// U cap U~, the largest symmetric relation inside U.
Relation symmetrize(const Relation& u);

// Blocks of an equivalence relation, ordered by least member.
std::vector<ElementSet> equivalence_classes(const Relation& u);

Relation relation_from_partition(const FiniteSpace& space,
                                 const std::vector<ElementSet>& blocks);

// (A x A) cup (A^c x A^c): the equivalence relation identifying elements
// that agree on membership in A.
Relation split_relation(const FiniteSpace& space, const ElementSet& a);

}  // namespace unilab
