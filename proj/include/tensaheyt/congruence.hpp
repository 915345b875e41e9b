#pragma once

#include <optional>
#include <vector>

#include "tensaheyt/tense_filter.hpp"

namespace tensaheyt {

/// Equivalence relation on the carrier as a class-id array. Class ids are
/// canonical: each element maps to the least id in its class, so equal
/// partitions compare equal.
class Congruence {
 public:
  /// Canonicalizes an arbitrary labelling (equal labels = same class).
  static Congruence from_labels(const std::vector<Elem>& labels);
  static Congruence identity(std::size_t n);
  static Congruence total(std::size_t n);

  std::size_t size() const noexcept { return class_of_.size(); }
  Elem class_of(Elem x) const { return class_of_[x]; }
  bool related(Elem x, Elem y) const { return class_of_[x] == class_of_[y]; }
  std::size_t class_count() const;
  /// Class representatives (least members) in increasing order.
  std::vector<Elem> representatives() const;
  /// Every pair related here is related in `coarser`.
  bool refines(const Congruence& coarser) const;

  const std::vector<Elem>& labels() const noexcept { return class_of_; }
  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  explicit Congruence(std::vector<Elem> canonical) : class_of_(std::move(canonical)) {}
  std::vector<Elem> class_of_;
};

/// First operation (meet, join, imp, g, h, f, p) and pair that the
/// partition fails to respect, as a failing finding; PASS otherwise.
Finding check_compatibility(const TenseHAlgebra& a, const Congruence& theta);

/// theta_F = {(x, y) : x <-> y in F}. Throws NotATenseFilter.
Congruence congruence_from_filter(const TenseHAlgebra& a, const TenseFilter& f);

/// [1]_theta. Throws NotACongruence when theta is not compatible with all
/// operations.
TenseFilter filter_from_congruence(const TenseHAlgebra& a, const Congruence& theta);

/// Con_t(A) obtained from the tense filters, with the inclusion order.
struct CongruenceLattice {
  std::vector<TenseFilter> filters;
  std::vector<Congruence> congruences;       // congruences[i] = theta of filters[i]
  std::vector<std::vector<bool>> contained;  // contained[i][j]: congruences[i] refines congruences[j]
};

/// Maps every tense filter to its congruence and checks that the map is an
/// order isomorphism with inverse filter_from_congruence. Throws
/// IsomorphismFailure otherwise.
CongruenceLattice congruence_lattice(const TenseHAlgebra& a);

/// Some a != 1 never reaches 0 under [N]^(k); nullopt when simple.
std::optional<Elem> simplicity_witness(const TenseHAlgebra& a);

/// For every a != 1 some [N]^(k)(a) = 0.
bool is_simple(const TenseHAlgebra& a);

/// There is b != 1 such that every a != 1 has some [N]^(k)(a) <= b, i.e. the
/// tense filters other than {1} share an element below 1.
bool is_subdirectly_irreducible(const TenseHAlgebra& a);

/// A/theta on class representatives; element i of the quotient is the
/// class of representatives()[i], named "[x]".
struct Quotient {
  TenseHAlgebra algebra;
  std::vector<Elem> projection;  // element of A -> element of A/theta
};

/// Throws NotACongruence for incompatible partitions and
/// DegenerateAlgebra for the total congruence.
Quotient quotient(const TenseHAlgebra& a, const Congruence& theta);

}  // namespace tensaheyt
