#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tensaheyt/element_set.hpp"

namespace tensaheyt {

/// A finite partially ordered set on ids 0..n-1 with display names.
///
/// The order is stored as principal up-sets and down-sets, so `leq`, `up`
/// and `down` are O(1). Instances are immutable once built.
class FinitePoset {
 public:
  /// Builds the reflexive-transitive closure of the covering pairs
  /// `(lower, upper)`. Throws NotAPartialOrder if the closure is not
  /// antisymmetric (a cycle) or a pair mentions an unknown id.
  static FinitePoset from_covers(std::vector<std::string> names,
                                 const std::vector<std::pair<Elem, Elem>>& covers);

  /// `up_rows[x]` holds every y with x <= y. Validates reflexivity,
  /// antisymmetry and transitivity unless `validate` is false (for callers
  /// that generate a known order, e.g. subset inclusion).
  static FinitePoset from_up_rows(std::vector<std::string> names, std::vector<ElementSet> up_rows,
                                  bool validate = true);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem x) const { return names_.at(x); }
  std::optional<Elem> find(std::string_view name) const;

  bool leq(Elem a, Elem b) const { return up_[a].test(b); }
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }

  const ElementSet& up(Elem x) const { return up_[x]; }
  const ElementSet& down(Elem x) const { return down_[x]; }

  ElementSet up_closure(const ElementSet& s) const;
  ElementSet down_closure(const ElementSet& s) const;
  bool is_upset(const ElementSet& s) const;
  bool is_downset(const ElementSet& s) const;

  /// Position of each element in a fixed linear extension (x < y implies
  /// rank(x) < rank(y)).
  std::size_t rank(Elem x) const { return rank_[x]; }

  /// Covering pairs (x, y): x < y with nothing strictly between, sorted.
  std::vector<std::pair<Elem, Elem>> covers() const;

  /// Greatest element of `s` if one exists.
  std::optional<Elem> maximum(const ElementSet& s) const;
  /// Least element of `s` if one exists.
  std::optional<Elem> minimum(const ElementSet& s) const;

 private:
  FinitePoset(std::vector<std::string> names, std::vector<ElementSet> up_rows);

  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::size_t> rank_;
};

}  // namespace tensaheyt
