#include "tensaheyt/box.hpp"

#include <algorithm>

#include "tensaheyt/errors.hpp"

namespace tensaheyt {

OpTable box_u(const TenseHAlgebra& a, TenseOp u) {
  const std::size_t n = a.size();
  OpTable out(n);
  for (Elem x = 0; x < n; ++x) {
    Elem acc = a.top();
    for (Elem b = 0; b < n; ++b) {
      acc = a.meet(acc, a.imp(a.apply(u, a.meet(x, b)), a.apply(u, b)));
    }
    out[x] = acc;
  }
  return out;
}

BoxN box_N(const TenseHAlgebra& a) {
  const std::size_t n = a.size();
  BoxN out;
  for (std::size_t i = 0; i < 4; ++i) out.per_op[i] = box_u(a, kTenseOps[i]);
  out.table.resize(n);
  out.closed_form.resize(n);
  for (Elem x = 0; x < n; ++x) {
    Elem acc = a.top();
    for (const auto& t : out.per_op) acc = a.meet(acc, t[x]);
    out.table[x] = acc;
    out.closed_form[x] = a.meet(a.neg(a.g(x)), a.neg(a.h(x)));
    if (out.table[x] != out.closed_form[x]) {
      throw CharacterizationMismatch("[N](" + a.name(x) + ") = " + a.name(out.table[x]) +
                                     " but ~g & ~h gives " + a.name(out.closed_form[x]));
    }
  }
  return out;
}

Elem box_N_iterates(const TenseHAlgebra& a, const BoxN& n, Elem x, std::size_t k) {
  // The powers [N]^i(x) are eventually periodic and every value they take
  // already occurs among the first |A|, so larger k change nothing.
  k = std::min(k, a.size());
  Elem power = x;
  Elem acc = x;
  for (std::size_t i = 0; i < k; ++i) {
    power = n(power);
    acc = a.meet(acc, power);
  }
  return acc;
}

Elem box_N_iterates(const TenseHAlgebra& a, Elem x, std::size_t k) { return box_N_iterates(a, box_N(a), x, k); }

Elem box_N_limit(const TenseHAlgebra& a, const BoxN& n, Elem x) { return box_N_iterates(a, n, x, a.size()); }

}  // namespace tensaheyt
