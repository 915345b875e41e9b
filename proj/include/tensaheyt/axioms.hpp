#pragma once

#include "tensaheyt/report.hpp"
#include "tensaheyt/tense_algebra.hpp"

namespace tensaheyt {

/// Exhaustive scan of the defining axioms T1-T8, one finding per axiom in
/// order. A failing axiom carries its least violating tuple in id order
/// (x before y), e.g. `T7 FAIL x=c y=d`.
AxiomReport check_axioms(const TenseHAlgebra& a);

/// Exhaustive scan of the derived laws T9-T14 (antitonicity, the two Galois
/// adjunctions, and the two composite inequalities). These follow from
/// T1-T8, so on a valid algebra any failure points at a bug.
AxiomReport check_derived_laws(const TenseHAlgebra& a);

/// For every filter S: f^-1(S) and p^-1(S) are ideals; for every prime
/// filter S: A\g^-1(S) and A\h^-1(S) are filters. Witness `S=<generator>`.
Report check_prime_preimages(const TenseHAlgebra& a);

}  // namespace tensaheyt
