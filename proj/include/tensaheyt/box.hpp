#pragma once

#include <array>

#include "tensaheyt/tense_algebra.hpp"

namespace tensaheyt {

/// [u](a) = meet over all b of u(a & b) -> u(b). Defined for any antitone u;
/// on a tense H-algebra [g] = ~g and [h] = ~h.
OpTable box_u(const TenseHAlgebra& a, TenseOp u);

/// [N] = [f] & [g] & [h] & [p], kept alongside its per-operator factors and
/// the closed form ~g & ~h.
struct BoxN {
  std::array<OpTable, 4> per_op;  // indexed like kTenseOps
  OpTable table;                  // the four-way meet
  OpTable closed_form;            // ~g(a) & ~h(a)

  Elem operator()(Elem a) const { return table[a]; }
  const OpTable& of(TenseOp u) const { return per_op[static_cast<std::size_t>(u)]; }
};

/// Computes both forms of [N]. On a tense H-algebra they coincide; a
/// disagreement throws CharacterizationMismatch naming the element.
BoxN box_N(const TenseHAlgebra& a);

/// [N]^(k)(x) = x & [N](x) & ... & [N]^k(x). Non-increasing in k and
/// constant from k = |A| on.
Elem box_N_iterates(const TenseHAlgebra& a, const BoxN& n, Elem x, std::size_t k);
Elem box_N_iterates(const TenseHAlgebra& a, Elem x, std::size_t k);

/// The stable value [N]^(|A|)(x).
Elem box_N_limit(const TenseHAlgebra& a, const BoxN& n, Elem x);

}  // namespace tensaheyt
