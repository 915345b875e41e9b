#include "tensaheyt/lddt.hpp"

#include "tensaheyt/errors.hpp"
#include "tensaheyt/tense_filter.hpp"

namespace tensaheyt {

LddtResult lddt_check(const TenseHAlgebra& a, const BoxN& n, const ElementSet& gamma, const ElementSet& delta,
                      Elem psi, const Limits& limits) {
  LddtResult r;
  r.lhs = generated_tense_filter(a, n, gamma | delta).members().test(psi);
  const ElementSet from_gamma = generated_tense_filter(a, n, gamma).members();

  const auto d = members(delta);
  if (d.empty()) {
    r.degenerate = true;
    for (std::size_t k = 0; k <= a.size() && !r.rhs; ++k) {
      if (from_gamma.test(a.imp(box_N_iterates(a, n, a.top(), k), psi))) {
        r.rhs = true;
        r.k = k;
        r.subset = ElementSet(a.size());
      }
    }
    return r;
  }

  if (d.size() >= 63 || (std::uint64_t{1} << d.size()) * (a.size() + 1) > limits.max_evaluations) {
    throw AssignmentSpaceTooLarge("too many subsets of Delta to scan");
  }
  for (std::uint64_t mask = (std::uint64_t{1} << d.size()) - 1; mask > 0 && !r.rhs; --mask) {
    ElementSet subset(a.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (mask >> i & 1) subset.set(d[i]);
    }
    const Elem m = a.lattice().meet_all(subset);
    for (std::size_t k = 0; k <= a.size(); ++k) {
      if (from_gamma.test(a.imp(box_N_iterates(a, n, m, k), psi))) {
        r.rhs = true;
        r.k = k;
        r.subset = std::move(subset);
        break;
      }
    }
  }
  return r;
}

LddtResult lddt_check(const TenseHAlgebra& a, const ElementSet& gamma, const ElementSet& delta, Elem psi,
                      const Limits& limits) {
  return lddt_check(a, box_N(a), gamma, delta, psi, limits);
}

}  // namespace tensaheyt
