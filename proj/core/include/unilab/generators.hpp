#pragma once

#include <cstdint>
#include <random>

#include "unilab/uniformity.hpp"

namespace unilab {

// Deterministic source for test instances. The raw engine is the standard
// mt19937_64 stream; derived draws avoid std::uniform_int_distribution on
// purpose, since its output is implementation-defined and these draws must
// reproduce bit-for-bit everywhere. Plain modulo bias is irrelevant here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Inclusive range.
  int uniform(int lo, int hi) {
    if (lo > hi) fail(ErrorCode::InvalidArgument, "empty range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

  bool coin() { return next() & 1; }

 private:
  std::mt19937_64 eng_;
};

Relation random_relation(Rng& rng, const FiniteSpace& space, int percent);
Relation random_reflexive_symmetric(Rng& rng, const FiniteSpace& space,
                                    int percent);

// Random symmetric matrix pushed through the min-plus shortest-path
// closure, at level 1.
SemiMetric random_semimetric(Rng& rng, const FiniteSpace& space);

// Random laminar refinement with radius 1/(depth+1) at splitting depth,
// at the infinite level.
SemiMetric random_ultrametric(Rng& rng, const FiniteSpace& space);

std::vector<ElementSet> random_partition(Rng& rng, const FiniteSpace& space);

// A mix of shapes: canonical bases of random matrices, partition bases,
// and subbase mixtures of entourages from two matrices.
UniformityBase random_base(Rng& rng, const FiniteSpace& space);

std::vector<int> random_map(Rng& rng, int source_size, int target_size);

ElementSet random_subset(Rng& rng, int carrier);

}  // namespace unilab
