#include "tensaheyt/relation.hpp"

#include <stdexcept>

namespace tensaheyt {

Relation Relation::from_pairs(std::size_t n, const std::vector<std::pair<Elem, Elem>>& pairs) {
  Relation r(n);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw std::out_of_range("relation pair outside the carrier");
    r.set(x, y);
  }
  return r;
}

Relation Relation::converse() const {
  Relation out(size());
  for (Elem x = 0; x < size(); ++x) {
    for (Elem y : members(rows_[x])) out.set(y, x);
  }
  return out;
}

Relation Relation::compose(const Relation& other) const {
  Relation out(size());
  for (Elem x = 0; x < size(); ++x) {
    for (Elem y : members(rows_[x])) out.rows_[x] |= other.rows_[y];
  }
  return out;
}

std::vector<std::pair<Elem, Elem>> Relation::pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < size(); ++x) {
    for (Elem y : members(rows_[x])) out.emplace_back(x, y);
  }
  return out;
}

ElementSet frame_g(const Relation& r, const ElementSet& u) {
  ElementSet out(r.size());
  const ElementSet outside = ~u;
  for (Elem x = 0; x < r.size(); ++x) {
    if (r.row(x).intersects(outside)) out.set(x);
  }
  return out;
}

ElementSet frame_f(const Relation& r, const ElementSet& u) {
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    if (!r.row(x).intersects(u)) out.set(x);
  }
  return out;
}

ElementSet frame_h(const Relation& r_converse, const ElementSet& u) { return frame_g(r_converse, u); }

ElementSet frame_p(const Relation& r_converse, const ElementSet& u) { return frame_f(r_converse, u); }

}  // namespace tensaheyt
