#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tensaheyt/lattice.hpp"

namespace tensaheyt {

/// A finite Heyting algebra: a bounded distributive lattice together with
/// its relative pseudocomplement table.
class HeytingAlgebra {
 public:
  /// `imp` is trusted; use heyting_implication() to compute it.
  HeytingAlgebra(FiniteLattice lattice, std::vector<Elem> imp);

  const FiniteLattice& lattice() const noexcept { return lattice_; }
  const FinitePoset& poset() const noexcept { return lattice_.poset(); }
  std::size_t size() const noexcept { return lattice_.size(); }
  const std::string& name(Elem x) const { return lattice_.name(x); }
  const std::vector<std::string>& names() const noexcept { return poset().names(); }

  bool leq(Elem a, Elem b) const { return lattice_.leq(a, b); }
  Elem meet(Elem a, Elem b) const { return lattice_.meet(a, b); }
  Elem join(Elem a, Elem b) const { return lattice_.join(a, b); }
  Elem imp(Elem a, Elem b) const { return imp_[a * size() + b]; }
  Elem bot() const noexcept { return lattice_.bot(); }
  Elem top() const noexcept { return lattice_.top(); }

  /// a -> 0
  Elem neg(Elem a) const { return imp(a, bot()); }
  /// (a -> b) & (b -> a)
  Elem iff(Elem a, Elem b) const { return meet(imp(a, b), imp(b, a)); }

 private:
  FiniteLattice lattice_;
  std::vector<Elem> imp_;
};

/// First (x, y, z) in id order with x & (y | z) != (x & y) | (x & z).
std::optional<std::array<Elem, 3>> distributivity_witness(const FiniteLattice& lattice);

/// Largest c with a & c <= b, if it exists.
std::optional<Elem> relative_pseudocomplement(const FiniteLattice& lattice, Elem a, Elem b);

/// Equips a distributive lattice with its Heyting implication.
/// Throws NotDistributive (with the witness triple) or
/// NoRelativePseudocomplement.
HeytingAlgebra heyting_implication(FiniteLattice lattice);

/// The Boolean algebra of all subsets of a point set, subsets ordered by
/// bitmask value (bit i = point i) and named `{p,q,...}`.
HeytingAlgebra powerset_algebra(const std::vector<std::string>& point_names);

/// The n-element chain 0 < 1 < ... < n-1, named "0", "m1", ..., "1".
HeytingAlgebra chain_algebra(std::size_t n);

}  // namespace tensaheyt
