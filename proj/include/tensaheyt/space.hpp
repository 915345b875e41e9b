#pragma once

#include <vector>

#include "tensaheyt/limits.hpp"
#include "tensaheyt/poset.hpp"
#include "tensaheyt/relation.hpp"
#include "tensaheyt/report.hpp"

namespace tensaheyt {

/// Finite tense H-space: a poset (discrete topology, so every upset is
/// clopen) with a binary relation R.
struct TenseHSpace {
  FinitePoset poset;
  Relation r;

  std::size_t size() const noexcept { return poset.size(); }
  const std::string& name(Elem x) const { return poset.name(x); }
  const std::vector<std::string>& names() const noexcept { return poset.names(); }
  /// The order as a relation: (x, y) iff x <= y.
  Relation order() const;
};

/// All upsets of the poset in numeric order (the empty set first, the full
/// set last). Throws CarrierTooLarge once more than `limit` upsets exist.
std::vector<ElementSet> enumerate_upsets(const FinitePoset& poset, std::size_t limit = Limits{}.max_elements);

/// S2: R(x) = down(R(x)) & up(R(x)) for every x, witness `x=<point>`.
/// S3: g_R, h_R, f_R, p_R map upsets to upsets, witness `op=<u> U=<upset>`.
Report check_space_axioms(const TenseHSpace& x, const Limits& limits = {});

}  // namespace tensaheyt
