#pragma once

#include <vector>

#include "tensaheyt/poset.hpp"

namespace tensaheyt {

/// A finite bounded lattice with dense meet/join tables.
class FiniteLattice {
 public:
  /// Tables are trusted as given; use build_lattice() to derive them from
  /// an order.
  FiniteLattice(FinitePoset poset, std::vector<Elem> meet, std::vector<Elem> join, Elem bot, Elem top);

  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  const std::string& name(Elem x) const { return poset_.name(x); }

  bool leq(Elem a, Elem b) const { return poset_.leq(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem bot() const noexcept { return bot_; }
  Elem top() const noexcept { return top_; }

  /// Meet of a set; the empty meet is top.
  Elem meet_all(const ElementSet& s) const;
  /// Join of a set; the empty join is bot.
  Elem join_all(const ElementSet& s) const;

  /// x != bot and x = a v b implies x = a or x = b.
  bool is_join_irreducible(Elem x) const;

 private:
  FinitePoset poset_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bot_;
  Elem top_;
};

/// Computes meet/join tables and the bounds of `poset`. Throws NotALattice
/// naming the first pair (in id order) without a glb or lub.
FiniteLattice build_lattice(FinitePoset poset);

}  // namespace tensaheyt
