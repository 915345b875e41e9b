#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensaheyt/space.hpp"
#include "tensaheyt/tense_algebra.hpp"

namespace tensaheyt {

/// Line-oriented algebra description; `#` starts a comment.
///
///   elements: 0 a b c d 1
///   leq: 0<a 0<b a<c b<c b<d c<1 d<1
///   op g: 0->d a->d b->d c->b d->d 1->0
///
/// `leq` lists covering pairs (any generating pairs work, the order is
/// their reflexive-transitive closure). Operator lines are optional here.
struct AlgebraText {
  HeytingAlgebra heyting;
  std::array<std::optional<OpTable>, 4> ops;  // indexed like kTenseOps

  /// Throws FormatError naming the first missing operator.
  TenseHAlgebra to_tense() const;
};

/// Throws FormatError for unknown keys or names, duplicate keys, elements
/// or entries, and incomplete operator lines; order and lattice problems
/// surface as NotAPartialOrder, NotALattice, NotDistributive.
AlgebraText parse_algebra_text(std::string_view text);
TenseHAlgebra read_tense_algebra(std::string_view text);
std::string write_algebra(const TenseHAlgebra& a);

/// Space description:
///
///   points: ^a ^b ^d
///   leq: ^d<^b
///   rel R: ^b->^a ^b->^d
std::string write_space(const TenseHSpace& x);
TenseHSpace read_space(std::string_view text);

/// Map description: `x->y` entries, any number per line. Every domain name
/// must appear exactly once. Returns the image ids.
std::vector<Elem> read_map(std::string_view text, const std::vector<std::string>& domain,
                           const std::vector<std::string>& codomain);
std::string write_map(const std::vector<Elem>& map, const std::vector<std::string>& domain,
                      const std::vector<std::string>& codomain);

/// Whole file contents. Throws FormatError when the file cannot be read.
std::string read_file(const std::string& path);
/// Throws FormatError when the file cannot be written.
void write_file(const std::string& path, std::string_view contents);

}  // namespace tensaheyt
