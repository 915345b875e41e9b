#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tensaheyt/corpus.hpp"
#include "tensaheyt/formula.hpp"
#include "tensaheyt/report.hpp"

namespace tensaheyt {

/// Variable index -> element.
using Assignment = std::map<unsigned, Elem>;

/// Evaluates through the operation tables. Throws UnboundVariable.
Elem eval(const Formula& f, const TenseHAlgebra& a, const Assignment& m);

/// `x1=b x2=c`, variables in increasing order.
std::string format_assignment(const TenseHAlgebra& a, const Assignment& m);

struct Validity {
  bool valid = true;
  /// Least falsifying assignment (variables compared in increasing index
  /// order, elements by id) and the value it produces.
  std::optional<Assignment> countermodel;
  Elem value = 0;
  std::uint64_t evaluations = 0;
};

/// Checks eval = 1 under all |A|^|vars| assignments. Throws
/// AssignmentSpaceTooLarge when that count exceeds limits.max_evaluations.
Validity is_valid(const Formula& f, const TenseHAlgebra& a, const Limits& limits = {});

struct Countermodel {
  std::string algebra;  // corpus name
  std::size_t position;  // index in the corpus
  Assignment assignment;
  Elem value;
};

/// First algebra of `corpus` (in order) refuting f, with its least
/// falsifying assignment; nullopt when every algebra validates f.
std::optional<Countermodel> countermodel_search(const Formula& f, const std::vector<NamedAlgebra>& corpus,
                                                const Limits& limits = {});

/// The same search over every frame algebra with 1..max_points points, in
/// frame_corpus order, built lazily.
std::optional<Countermodel> countermodel_search_frames(const Formula& f, std::size_t max_points,
                                                       const Limits& limits = {});

/// Element-level soundness of the rules:
///   MP   a = 1 and a -> b = 1 give b = 1
///   RN1  a -> f(b) = 1 gives b -> p(a) = 1
///   RN2  g(a) -> b = 1 gives h(b) -> a = 1
/// Witness a=, b= of the first failing pair.
Report check_rules_soundness(const TenseHAlgebra& a);

struct NamedFormula {
  std::string name;
  Formula formula;
};

/// The tense axiom schemes of the calculus over x1, x2:
///   g-join  g x1 & f x2 -> g (x1 | x2)
///   f-meet  f (x1 & x2) -> f x1 | g x2
///   h-join  h x1 & p x2 -> h (x1 | x2)
///   p-meet  p (x1 & x2) -> p x1 | h x2
std::vector<NamedFormula> tense_axiom_schemes();

}  // namespace tensaheyt
