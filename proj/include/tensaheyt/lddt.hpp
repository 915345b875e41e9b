#pragma once

#include <cstddef>
#include <optional>

#include "tensaheyt/box.hpp"
#include "tensaheyt/limits.hpp"

namespace tensaheyt {

/// Both sides of the deduction-detachment equivalence at element level:
///   lhs  psi in [Gamma u Delta)_N
///   rhs  some k <= |A| and nonempty D within Delta have
///        [N]^(k)(meet D) -> psi in [Gamma)_N
/// With Delta empty the rhs is read with meet {} = 1 and `degenerate` set.
struct LddtResult {
  bool lhs = false;
  bool rhs = false;
  bool degenerate = false;
  std::optional<std::size_t> k;    // rhs witness
  std::optional<ElementSet> subset;  // rhs witness D (empty when degenerate)

  bool holds() const { return lhs == rhs; }
};

/// Subsets of Delta are tried from the full set down (by bitmask over
/// Delta's members) and k upward, so the witness is deterministic. Throws
/// AssignmentSpaceTooLarge when 2^|Delta| * (|A| + 1) exceeds
/// limits.max_evaluations.
LddtResult lddt_check(const TenseHAlgebra& a, const ElementSet& gamma, const ElementSet& delta, Elem psi,
                      const Limits& limits = {});
LddtResult lddt_check(const TenseHAlgebra& a, const BoxN& n, const ElementSet& gamma, const ElementSet& delta,
                      Elem psi, const Limits& limits = {});

}  // namespace tensaheyt
