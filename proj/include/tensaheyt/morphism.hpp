#pragma once

#include <vector>

#include "tensaheyt/report.hpp"
#include "tensaheyt/space.hpp"
#include "tensaheyt/tense_algebra.hpp"

namespace tensaheyt {

/// Element map between two tense H-algebras: map[x] is the image of x.
struct AlgebraMorphism {
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  friend bool operator==(const AlgebraMorphism&, const AlgebraMorphism&) = default;
};

/// Point map between two tense H-spaces.
struct SpaceMorphism {
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  friend bool operator==(const SpaceMorphism&, const SpaceMorphism&) = default;
};

/// k2 after k1.
AlgebraMorphism compose(const AlgebraMorphism& k1, const AlgebraMorphism& k2);
SpaceMorphism compose(const SpaceMorphism& k1, const SpaceMorphism& k2);

/// Findings bot, top, meet, join, imp, g, h, f, p, each with its first
/// failing argument tuple. Throws FormatError if the map is not total.
Report check_homomorphism(const TenseHAlgebra& a, const TenseHAlgebra& b, const AlgebraMorphism& k);

/// Homomorphism findings plus `bijective`.
Report check_isomorphism(const TenseHAlgebra& a, const TenseHAlgebra& b, const AlgebraMorphism& k);

/// `monotone` (x <= y gives k(x) <= k(y)) and `up-image` (k(up x) = up k(x)).
Report check_heyting_morphism(const TenseHSpace& x1, const TenseHSpace& x2, const SpaceMorphism& k);

/// Both sides of the tense H-function characterization, evaluated
/// independently.
struct MorphismEquivalence {
  Report pointwise;  // m1 .. m5, witnesses x=, y=
  Report upsets;     // M1 .. M5, witnesses x=, y= for M1 and U= otherwise
  bool holds() const { return pointwise.all_pass(); }
};

/// Evaluates m1-m5 and M1-M5. The two verdicts agree for every map between
/// finite tense H-spaces; a disagreement throws EquivalenceMismatch.
MorphismEquivalence check_morphism_equivalence(const TenseHSpace& x1, const TenseHSpace& x2, const SpaceMorphism& k,
                                               const Limits& limits = {});

}  // namespace tensaheyt
