#pragma once

#include <vector>

#include "tensaheyt/filter.hpp"
#include "tensaheyt/morphism.hpp"
#include "tensaheyt/space.hpp"
#include "tensaheyt/tense_algebra.hpp"

namespace tensaheyt {

/// The spectrum of an algebra: prime filters ordered by inclusion with the
/// relation R_A. Point i is primes[i]; points are named "^<generator>".
struct DualSpace {
  TenseHSpace space;
  std::vector<Filter> primes;
};

/// (S, T) in R_A iff f^-1(S) within A\T within g^-1(S).
Relation spectral_relation_fg(const TenseHAlgebra& a, const std::vector<Filter>& primes);
/// The same relation through p and h: p^-1(T) within A\S within h^-1(T).
Relation spectral_relation_ph(const TenseHAlgebra& a, const std::vector<Filter>& primes);

DualSpace dual_space(const TenseHAlgebra& a);

/// The upsets of a space with the frame operators of its relation.
/// Element i is upsets[i] (numeric order), named like `{x,y}`.
struct DualAlgebra {
  TenseHAlgebra algebra;
  std::vector<ElementSet> upsets;
};

/// Throws SpaceAxiomViolation (naming the failing axiom and witness) when
/// S2 or S3 fails, and CarrierTooLarge when the upsets exceed the cap.
DualAlgebra dual_algebra(const TenseHSpace& x, const Limits& limits = {});

/// A -> D(X(A)), a -> {P : a in P}.
struct AlgebraRoundTrip {
  DualSpace spectrum;
  DualAlgebra algebra;
  AlgebraMorphism sigma;
  Report verification;  // check_isomorphism findings
};

/// Builds sigma and verifies it is a tense H-isomorphism; throws
/// IsomorphismFailure otherwise.
AlgebraRoundTrip sigma(const TenseHAlgebra& a, const Limits& limits = {});

/// X -> X(D(X)), x -> {U upset : x in U}.
struct SpaceRoundTrip {
  DualAlgebra algebra;
  DualSpace spectrum;
  SpaceMorphism epsilon;
  Report verification;  // bijective, order, relation-forward, relation-backward
};

/// Builds epsilon and verifies it is a bijection that preserves and
/// reflects both the order and R; throws IsomorphismFailure otherwise.
SpaceRoundTrip epsilon(const TenseHSpace& x, const Limits& limits = {});

/// X(k): X(A2) -> X(A1), S -> k^-1(S). Throws NotAHomomorphism when k is
/// not a tense H-homomorphism.
SpaceMorphism dual_morphism(const TenseHAlgebra& a1, const DualSpace& x1, const TenseHAlgebra& a2,
                            const DualSpace& x2, const AlgebraMorphism& k);

}  // namespace tensaheyt
