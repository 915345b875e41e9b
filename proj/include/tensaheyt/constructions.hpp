#pragma once

#include <string>
#include <vector>

#include "tensaheyt/limits.hpp"
#include "tensaheyt/relation.hpp"
#include "tensaheyt/tense_algebra.hpp"

namespace tensaheyt {

/// Powerset algebra of the points with the operators induced by R
/// (g_R, h_R, f_R, p_R). Subsets are ordered by bitmask value.
/// Throws DegenerateAlgebra for no points and CarrierTooLarge when 2^|X|
/// exceeds limits.max_elements.
TenseHAlgebra build_frame_algebra(const std::vector<std::string>& points, const Relation& r,
                                  const Limits& limits = {});

/// Points named "0".."n-1".
TenseHAlgebra build_frame_algebra(std::size_t points, const Relation& r, const Limits& limits = {});

/// g = h with g(1) = 0 and g(x) = 1 otherwise; f = p with f(0) = 1 and
/// f(x) = 0 otherwise.
TenseHAlgebra build_extreme(HeytingAlgebra h);

/// The six-element algebra 0 < a, b; a, b < c; b < d; c, d < 1 with its
/// fixed operator table.
TenseHAlgebra build_ej2();

/// Componentwise product; elements named "(x,y)", ordered with the left
/// coordinate most significant.
TenseHAlgebra product(const TenseHAlgebra& left, const TenseHAlgebra& right);

}  // namespace tensaheyt
