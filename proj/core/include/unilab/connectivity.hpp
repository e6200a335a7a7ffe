#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unilab/uniformity.hpp"

namespace unilab {

// No edge of u runs between a and b. For reflexive u this forces a and b to
// be disjoint.
bool separated_by(const ElementSet& a, const ElementSet& b, const Relation& u);

// Some member of the uniformity avoids a x b entirely; equivalently the
// complement of a x b belongs to the uniformity. Returns a witness member.
std::optional<Relation> uniformly_separated(const ElementSet& a,
                                            const ElementSet& b,
                                            const UniformityBase& base);

// Points x = p_0, p_1, ..., p_k = y with every consecutive pair in u, for
// reflexive symmetric u. Shortest such chain, by breadth-first search.
std::optional<std::vector<int>> find_chain(int x, int y, const Relation& u);

// Partition of e into classes reachable by chains inside e, blocks ordered
// by least member. u must be reflexive and symmetric.
std::vector<ElementSet> chain_components(const ElementSet& e,
                                         const Relation& u);

struct ChainConnectivity {
  bool connected = true;
  // When disconnected: a member index whose symmetrization splits e, and
  // the two-sided split itself.
  std::optional<int> violating_member;
  std::optional<std::pair<ElementSet, ElementSet>> split;
};

// e is chain connected when every member (after symmetrization) chains any
// two points of e together through e.
//
// Checking the symmetrized members alone settles the question for the whole
// uniformity: any symmetric member of the uniformity contains sym(V) for
// some base member V, and shrinking the relation only refines the chain
// components. So if every sym(V) keeps e in one piece, so does every
// symmetric member, and asymmetric members chain through their
// symmetrizations' supersets anyway.
ChainConnectivity is_chain_connected(const ElementSet& e,
                                     const UniformityBase& base);

// For disconnected e: a split (A, B) with A holding the least element, both
// halves nonempty, and A, B uniformly separated. Returns nothing when e is
// chain connected. The two notions are exactly dual on finite carriers.
std::optional<std::pair<ElementSet, ElementSet>> separated_split(
    const ElementSet& e, const UniformityBase& base);

// Subsets A whose split relation (A x A) cup (A^c x A^c) belongs to the
// uniformity, in increasing mask order. Size-capped enumeration.
std::vector<ElementSet> self_separated_sets(const UniformityBase& base,
                                            int max_size = 16);

struct DimensionZeroReport {
  bool uniformly_zero_dimensional = false;
  bool strongly_zero_dimensional = false;
  bool topologically_zero_dimensional = false;
  bool strongly_totally_separated = false;
  bool totally_separated = false;
  bool hausdorff = false;
};

// The five smallness properties plus the separation floor, computed
// independently of one another so the implication chain between them stays
// a testable statement rather than a construction artifact.
DimensionZeroReport dimension_zero_report(const UniformityBase& base,
                                          int max_size = 16);

// Points a = t_0 <= ... <= t_m = b (or descending) with consecutive gaps
// strictly below r. Evenly spaced with step r/2, so m = ceil(|b-a| / (r/2)).
std::vector<Rational> rational_chain(const Rational& a, const Rational& b,
                                     const Rational& r);

}  // namespace unilab
