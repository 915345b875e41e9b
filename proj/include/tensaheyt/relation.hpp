#pragma once

#include <utility>
#include <vector>

#include "tensaheyt/element_set.hpp"

namespace tensaheyt {

/// Binary relation on 0..n-1 stored as successor rows: row(x) = R(x).
class Relation {
 public:
  explicit Relation(std::size_t n = 0) : rows_(n, ElementSet(n)) {}
  static Relation from_pairs(std::size_t n, const std::vector<std::pair<Elem, Elem>>& pairs);

  std::size_t size() const noexcept { return rows_.size(); }
  bool test(Elem x, Elem y) const { return rows_[x].test(y); }
  void set(Elem x, Elem y) { rows_[x].set(y); }
  const ElementSet& row(Elem x) const { return rows_[x]; }

  Relation converse() const;
  /// (x, z) in this∘other iff some y has (x, y) in this and (y, z) in other.
  Relation compose(const Relation& other) const;
  std::vector<std::pair<Elem, Elem>> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<ElementSet> rows_;
};

/// Operators induced on subsets of the points by a relation R:
///   g_R(U) = {x : R(x) meets X\U}      h_R(U) = {x : R^-1(x) meets X\U}
///   f_R(U) = {x : R(x) within X\U}     p_R(U) = {x : R^-1(x) within X\U}
ElementSet frame_g(const Relation& r, const ElementSet& u);
ElementSet frame_f(const Relation& r, const ElementSet& u);
/// h_R and p_R are frame_g and frame_f of the converse.
ElementSet frame_h(const Relation& r_converse, const ElementSet& u);
ElementSet frame_p(const Relation& r_converse, const ElementSet& u);

}  // namespace tensaheyt
