#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "unilab/errors.hpp"

namespace unilab {

inline constexpr int kMaxCarrierSize = 4096;

// A finite carrier {0, ..., size-1}. Labels are cosmetic; two spaces are
// interchangeable iff they have the same size.
struct FiniteSpace {
  int size = 0;
  std::optional<std::vector<std::string>> labels;

  explicit FiniteSpace(int n) : size(n) { check(); }
  FiniteSpace(int n, std::vector<std::string> names)
      : size(n), labels(std::move(names)) {
    check();
    if (static_cast<int>(labels->size()) != size)
      fail(ErrorCode::InvalidArgument, "label count does not match size");
  }

  bool compatible_with(const FiniteSpace& o) const { return size == o.size; }

 private:
  void check() const {
    if (size < 1 || size > kMaxCarrierSize)
      fail(ErrorCode::InvalidArgument,
           "carrier size must be between 1 and " +
               std::to_string(kMaxCarrierSize));
  }
};

// Subset of a carrier, stored as a bitset.
class ElementSet {
 public:
  explicit ElementSet(int n) : n_(n), bits_(words(n), 0) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "negative carrier size");
  }

  static ElementSet all(int n) {
    ElementSet s(n);
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }
  static ElementSet of(int n, std::initializer_list<int> xs) {
    ElementSet s(n);
    for (int x : xs) {
      s.check_index(x);
      s.set(x);
    }
    return s;
  }
  static ElementSet from_indices(int n, const std::vector<int>& xs) {
    ElementSet s(n);
    for (int x : xs) {
      s.check_index(x);
      s.set(x);
    }
    return s;
  }

  int carrier_size() const { return n_; }

  bool test(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { bits_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { bits_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : bits_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : bits_) if (w) return false;
    return true;
  }

  // Least member, or -1 if empty.
  int first() const {
    for (size_t w = 0; w < bits_.size(); ++w)
      if (bits_[w]) return static_cast<int>(w * 64) + __builtin_ctzll(bits_[w]);
    return -1;
  }

  bool is_subset_of(const ElementSet& o) const {
    check_same(o);
    for (size_t w = 0; w < bits_.size(); ++w)
      if (bits_[w] & ~o.bits_[w]) return false;
    return true;
  }
  bool intersects(const ElementSet& o) const {
    check_same(o);
    for (size_t w = 0; w < bits_.size(); ++w)
      if (bits_[w] & o.bits_[w]) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& o) {
    check_same(o);
    for (size_t w = 0; w < bits_.size(); ++w) bits_[w] &= o.bits_[w];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    check_same(o);
    for (size_t w = 0; w < bits_.size(); ++w) bits_[w] |= o.bits_[w];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    return a &= b;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    return a |= b;
  }
  ElementSet complement() const {
    ElementSet r(n_);
    for (size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = ~bits_[w];
    r.trim();
    return r;
  }
  ElementSet minus(const ElementSet& o) const {
    check_same(o);
    ElementSet r(n_);
    for (size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] & ~o.bits_[w];
    return r;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

  std::vector<int> indices() const {
    std::vector<int> r;
    for (int i = 0; i < n_; ++i)
      if (test(i)) r.push_back(i);
    return r;
  }

  // Low 32 elements as a mask; only valid for carriers of size <= 32.
  uint32_t mask32() const { return static_cast<uint32_t>(bits_.empty() ? 0 : bits_[0]); }
  static ElementSet from_mask32(int n, uint32_t m) {
    ElementSet s(n);
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) s.set(i);
    return s;
  }

  const std::vector<uint64_t>& words_ref() const { return bits_; }
  std::vector<uint64_t>& words_ref() { return bits_; }

  void check_index(int i) const {
    if (i < 0 || i >= n_)
      fail(ErrorCode::IndexOutOfRange,
           "element " + std::to_string(i) + " outside carrier of size " +
               std::to_string(n_));
  }

  static int words(int n) { return (n + 63) >> 6; }

 private:
  void check_same(const ElementSet& o) const {
    if (n_ != o.n_)
      fail(ErrorCode::SpaceMismatch, "subsets over different carriers");
  }
  void trim() {
    int rem = n_ & 63;
    if (rem && !bits_.empty()) bits_.back() &= (uint64_t(1) << rem) - 1;
  }

  int n_;
  std::vector<uint64_t> bits_;
};

}  // namespace unilab
