#pragma once

#include <vector>

#include "tensaheyt/box.hpp"
#include "tensaheyt/filter.hpp"
#include "tensaheyt/report.hpp"

namespace tensaheyt {

/// A filter closed under the implication reversal x -> y in F implies
/// u(y) -> u(x) in F for every tense operator u.
struct TenseFilter {
  Filter base;

  const ElementSet& members() const noexcept { return base.members; }
  friend bool operator==(const TenseFilter&, const TenseFilter&) = default;
};

/// Verdict of is_tense_filter. `detail` holds one finding per
/// characterization, in this order:
///   reversal   x->y in F  =>  u(y)->u(x) in F
///   iff        x<->y in F =>  u(x)<->u(y) in F
///   galois     the four adjunction-style conditions (a)-(d)
///   box-N      x in F     =>  [N](x) in F
struct TenseFilterVerdict {
  bool is_tense = false;
  Report detail;
};

/// Evaluates all four characterizations; they always agree on a tense
/// H-algebra, so a split verdict throws CharacterizationMismatch.
/// Throws NotAFilter when `f` is not a filter.
TenseFilterVerdict is_tense_filter(const TenseHAlgebra& a, const BoxN& n, const Filter& f);
TenseFilterVerdict is_tense_filter(const TenseHAlgebra& a, const Filter& f);

/// Tense filters ordered by generator id.
std::vector<TenseFilter> enumerate_tense_filters(const TenseHAlgebra& a);

/// Least tense filter containing `generators`, computed in closed form as
/// up([N]^(k)(meet of generators)) with k = |A|. The empty set gives {1}.
TenseFilter generated_tense_filter(const TenseHAlgebra& a, const BoxN& n, const ElementSet& generators);
TenseFilter generated_tense_filter(const TenseHAlgebra& a, const ElementSet& generators);

}  // namespace tensaheyt
