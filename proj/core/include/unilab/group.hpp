#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unilab/semimetric.hpp"
#include "unilab/uniformity.hpp"

namespace unilab {

// Finite group given by its Cayley table. Construction checks closure,
// associativity, identity and inverses.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<int>> table,
                       std::optional<std::vector<std::string>> names =
                           std::nullopt);

  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);   // order n!
  static FiniteGroup dihedral(int n);    // order 2n
  static FiniteGroup quaternion8();

  int size() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverses_[a]; }
  int identity() const { return identity_; }
  const std::optional<std::vector<std::string>>& names() const {
    return names_;
  }
  FiniteSpace space() const;

 private:
  int n_;
  std::vector<int> table_;
  int identity_;
  std::vector<int> inverses_;
  std::optional<std::vector<std::string>> names_;
};

ElementSet set_product(const FiniteGroup& g, const ElementSet& a,
                       const ElementSet& b);
ElementSet set_inverse(const FiniteGroup& g, const ElementSet& a);
// x a x^{-1} elementwise.
ElementSet conjugate_subset(const FiniteGroup& g, int x, const ElementSet& a);

// A_L = { (x, y) : x^{-1} y in A } and A_R = { (x, y) : y x^{-1} in A }.
// These translate subsets at the identity into relations; left translations
// preserve the first, right translations the second.
Relation relation_left(const FiniteGroup& g, const ElementSet& a);
Relation relation_right(const FiniteGroup& g, const ElementSet& a);

struct InvarianceReport {
  bool left = false;
  bool right = false;
  bool conjugation = false;
};

InvarianceReport invariance(const FiniteGroup& g, const Relation& u);

// The subset at the identity of a left-invariant relation, i.e. the A with
// u = A_L. NotInvariant when u is not left-invariant.
ElementSet subset_from_invariant(const FiniteGroup& g, const Relation& u);

struct SubgroupReport {
  bool is_subgroup = false;
  bool is_normal = false;
};

// A subset is a subgroup exactly when A_L is an equivalence relation and
// the identity lies in A; normal when additionally A_L = A_R.
SubgroupReport subgroup_check(const FiniteGroup& g, const ElementSet& a);

struct GeneratedSubgroup {
  ElementSet subgroup;
  // Whether the generating set had to be padded with the identity or
  // inverses before the doubling fixpoint applied.
  bool input_symmetrized = false;
};

GeneratedSubgroup generated_subgroup(const FiniteGroup& g,
                                     const ElementSet& w);

struct LeftCore {
  Relation core;           // largest left-invariant relation inside u
  ElementSet core_subset;  // its subset at the identity
};

LeftCore left_core(const FiniteGroup& g, const Relation& u);

struct GroupUniformity {
  UniformityBase base;
  // Intersections added to make the family a filter base.
  int augmented_members = 0;
};

// Base { W_L } from a family of neighborhoods of the identity. Every W must
// contain the identity; the family is closed under pairwise intersection
// (augmenting as needed) and its smallest member M must satisfy M M inside
// M, which on a finite group makes M a subgroup. Without that no member can
// satisfy the square-root axiom, hence NoSquareRoot.
GroupUniformity left_uniformity_base(const FiniteGroup& g,
                                     const std::vector<ElementSet>& family);
GroupUniformity right_uniformity_base(const FiniteGroup& g,
                                      const std::vector<ElementSet>& family);

// Left cosets of a subgroup, ordered by least member.
std::vector<ElementSet> left_cosets(const FiniteGroup& g,
                                    const ElementSet& subgroup);

// Topology whose opens are the unions of left cosets of the intersection
// of the family. Members must be subgroups and the family conjugation
// compatible (each x A x^{-1} contains a member), which makes the left and
// right versions agree. The number of cosets is capped at 16.
Topology subgroup_topology(const FiniteGroup& g,
                           const std::vector<ElementSet>& family,
                           int max_cosets = 16);

// The topology above is Hausdorff exactly when the family intersects to
// the identity alone.
bool subgroups_hausdorff(const FiniteGroup& g,
                         const std::vector<ElementSet>& family);

InvarianceReport semimetric_invariance(const FiniteGroup& g,
                                       const SemiMetric& d);

}  // namespace unilab
