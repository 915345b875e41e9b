#pragma once

#include <vector>

#include "tensaheyt/duality.hpp"

namespace tensaheyt {

/// `fg-equals-ph`: R_A computed through (f, g) and through (p, h) agree,
/// witness S=, T= of the first differing pair.
/// `convex`: R_A(S) = down(R_A(S)) & up(R_A(S)) for every prime S.
Report check_spectral_relation(const TenseHAlgebra& a, const DualSpace& x);

/// For every prime S and element a:
///   g-membership  g(a) not in S  iff  every R_A-successor of S contains a
///   h-membership  h(a) not in S  iff  every R_A-predecessor of S contains a
///   f-membership  f(a) in S      iff  no R_A-successor of S contains a
///   p-membership  p(a) in S      iff  no R_A-predecessor of S contains a
/// Witness S=, a= of the first pair where the two sides differ.
Report check_spectral_membership(const TenseHAlgebra& a, const DualSpace& x);

/// The inclusion conditions on pairs of primes against relation
/// composites, with (S, T) in (X o Y) iff some Q has (S, Q) in X and
/// (Q, T) in Y:
///   g-composite  A\T within g^-1(S)  iff  (S, T) in R_A o (within)
///   h-composite  A\S within h^-1(T)  iff  (S, T) in (contains) o R_A
///   f-composite  f^-1(S) within A\T  iff  (S, T) in R_A o (contains)
///   p-composite  p^-1(T) within A\S  iff  (S, T) in (within) o R_A
Report check_composite_forms(const TenseHAlgebra& a, const DualSpace& x);

/// Upset witnessing that (x, y) is not in R.
struct SeparationWitness {
  Elem x;
  Elem y;
  char kind;         // 'f': x in f_R(U), y in U;  'g': y not in U, x not in g_R(U)
  ElementSet upset;  // U
};

struct SeparationResult {
  Report report;  // single finding `separation`; failing witness x=, y=
  std::vector<SeparationWitness> witnesses;
};

/// For each pair outside R, the first upset (numeric order) of the f kind,
/// otherwise the first of the g kind.
SeparationResult check_separation(const TenseHSpace& x, const Limits& limits = {});

}  // namespace tensaheyt
