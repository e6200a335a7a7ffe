#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unilab/semimetric.hpp"

namespace unilab {

// Axioms checked on a base family:
//   Reflexive     every member contains the diagonal
//   Symmetric     every member contains some member of its inverse
//   SquareRoot    every member U admits a member V with V*V inside U
//   Intersection  every two members contain a common member
struct BaseAxiomFailure {
  enum class Axiom { Reflexive, Symmetric, SquareRoot, Intersection };
  Axiom axiom;
  int first;        // offending member
  int second = -1;  // partner for Intersection
};

struct BaseValidation {
  std::vector<BaseAxiomFailure> failures;
  bool ok() const { return failures.empty(); }
};

BaseValidation validate_base(const std::vector<Relation>& members);

// Base of entourages on a finite carrier. Members are deduplicated but kept
// in insertion order; construction enforces the four axioms.
class UniformityBase {
 public:
  explicit UniformityBase(std::vector<Relation> members);

  const FiniteSpace& space() const { return space_; }
  int size() const { return space_.size; }
  const std::vector<Relation>& members() const { return members_; }

 private:
  FiniteSpace space_;
  std::vector<Relation> members_;
};

// Closes a family under pairwise intersection. The family must already
// satisfy the reflexive, symmetric and square-root axioms member-wise
// within itself (intersections inherit them), else InvalidSubbase.
UniformityBase base_from_subbase(const std::vector<Relation>& members);

// All entourages of d at its canonical radii.
UniformityBase base_from_semimetric(const SemiMetric& d);

// Whether u contains some member of the base, i.e. belongs to the
// generated uniformity.
bool contains(const UniformityBase& base, const Relation& u);

// Materialized list of open sets; only for carriers of size <= 16.
class Topology {
 public:
  Topology(FiniteSpace space, std::vector<uint32_t> open_masks)
      : space_(std::move(space)), opens_(std::move(open_masks)) {}

  const FiniteSpace& space() const { return space_; }
  const std::vector<uint32_t>& open_masks() const { return opens_; }
  bool is_open(uint32_t mask) const;
  std::vector<ElementSet> opens() const;

 private:
  FiniteSpace space_;
  std::vector<uint32_t> opens_;  // ascending
};

// A is open when every a in A has U[a] inside A for some member U.
bool is_open(const UniformityBase& base, const ElementSet& a);

Topology topology(const UniformityBase& base, int max_size = 16);

ElementSet interior(const UniformityBase& base, const ElementSet& a);

// Smallest closed superset; equals the intersection of V[A] over members V.
ElementSet closure(const UniformityBase& base, const ElementSet& a);

// Closure of E in the product of the space with itself: the intersection
// of V1 * E * V2 over member pairs.
Relation product_closure(const UniformityBase& base, const Relation& e);

// For compact-style K inside open W: a member V with V[K] inside W. Returns
// the first member in stored order that works (one always does).
Relation uniform_neighborhood(const UniformityBase& base, const ElementSet& k,
                              const ElementSet& w);

struct UniformContinuity {
  bool ok = true;
  std::optional<int> violating_member;  // index into the target base
};

// (f(x), f(y)) runs through every target member once (x, y) runs through
// some source member.
UniformContinuity uniformly_continuous(const std::vector<int>& f,
                                       const UniformityBase& source,
                                       const UniformityBase& target);

// Same, but only demanded for pairs whose first coordinate lies in e.
UniformContinuity uniformly_continuous_along(const std::vector<int>& f,
                                             const UniformityBase& source,
                                             const UniformityBase& target,
                                             const ElementSet& e);

// Restriction to a nonempty subset, on a fresh carrier of its size.
UniformityBase induced(const UniformityBase& base, const ElementSet& y);

// { (x, y) : (f(x), f(y)) in v } on the source carrier.
Relation preimage_relation(const std::vector<int>& f,
                           const FiniteSpace& source, const Relation& v);

UniformityBase pullback_base(const UniformityBase& target,
                             const std::vector<int>& f,
                             const FiniteSpace& source);

// Product base on the carrier of size nx * ny, pair (i, j) at index
// i * ny + j. Refuses products beyond the carrier bound.
UniformityBase product(const UniformityBase& bx, const UniformityBase& by);

// Every entourage of d at a canonical radius belongs to the uniformity and
// conversely every member contains such an entourage.
bool compatible(const UniformityBase& base, const SemiMetric& d);

struct SmallCover {
  int member;                       // index into the base
  std::vector<ElementSet> blocks;   // B x B inside that member, covering e
};

struct TotalBoundedness {
  bool totally_bounded = true;  // finite spaces always are
  std::vector<int> minimal_cover_sizes;  // per member: least center count
  std::vector<SmallCover> small_covers;
};

// Certificates of total boundedness for e: per member V, a minimal family
// of V-neighborhoods covering e, and a cover of e by V-small sets.
// Exhaustive search; carrier must have size <= 16.
TotalBoundedness totally_bounded(const UniformityBase& base,
                                 const ElementSet& e);

// Base of the largest uniformity with a base of equivalence relations
// inside the given one: equivalence closures of the symmetrized members.
UniformityBase equivalence_base(const UniformityBase& base);

}  // namespace unilab
