#include "tensaheyt/poset.hpp"

#include <algorithm>
#include <numeric>

#include "tensaheyt/errors.hpp"

namespace tensaheyt {

FinitePoset::FinitePoset(std::vector<std::string> names, std::vector<ElementSet> up_rows)
    : names_(std::move(names)), up_(std::move(up_rows)) {
  const std::size_t n = names_.size();
  down_.assign(n, ElementSet(n));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y : members(up_[x])) down_[y].set(x);
  }
  // |down(x)| grows strictly along the strict order, so sorting by it
  // gives a linear extension.
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return down_[a].count() < down_[b].count(); });
  rank_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank_[order[i]] = i;
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> names,
                                     const std::vector<std::pair<Elem, Elem>>& covers) {
  const std::size_t n = names.size();
  std::vector<ElementSet> up(n, ElementSet(n));
  for (Elem x = 0; x < n; ++x) up[x].set(x);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw NotAPartialOrder("covering pair mentions an unknown element");
    up[lo].set(hi);
  }
  // Warshall closure on bitset rows.
  for (Elem k = 0; k < n; ++k) {
    for (Elem i = 0; i < n; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
  for (Elem i = 0; i < n; ++i) {
    for (Elem j : members(up[i])) {
      if (j != i && up[j].test(i)) {
        throw NotAPartialOrder("order has a cycle through " + names[i] + " and " + names[j]);
      }
    }
  }
  return FinitePoset(std::move(names), std::move(up));
}

FinitePoset FinitePoset::from_up_rows(std::vector<std::string> names, std::vector<ElementSet> up_rows,
                                      bool validate) {
  const std::size_t n = names.size();
  if (up_rows.size() != n) throw NotAPartialOrder("relation size does not match element count");
  for (const auto& row : up_rows) {
    if (row.size() != n) throw NotAPartialOrder("relation row has the wrong width");
  }
  if (validate) {
    for (Elem x = 0; x < n; ++x) {
      if (!up_rows[x].test(x)) throw NotAPartialOrder("not reflexive at " + names[x]);
      for (Elem y : members(up_rows[x])) {
        if (y != x && up_rows[y].test(x)) {
          throw NotAPartialOrder("not antisymmetric at " + names[x] + ", " + names[y]);
        }
        if (!up_rows[y].is_subset_of(up_rows[x])) {
          throw NotAPartialOrder("not transitive through " + names[x] + " <= " + names[y]);
        }
      }
    }
  }
  return FinitePoset(std::move(names), std::move(up_rows));
}

std::optional<Elem> FinitePoset::find(std::string_view name) const {
  for (Elem x = 0; x < names_.size(); ++x) {
    if (names_[x] == name) return x;
  }
  return std::nullopt;
}

ElementSet FinitePoset::up_closure(const ElementSet& s) const {
  ElementSet out(size());
  for (Elem x : members(s)) out |= up_[x];
  return out;
}

ElementSet FinitePoset::down_closure(const ElementSet& s) const {
  ElementSet out(size());
  for (Elem x : members(s)) out |= down_[x];
  return out;
}

bool FinitePoset::is_upset(const ElementSet& s) const {
  for (Elem x : members(s)) {
    if (!up_[x].is_subset_of(s)) return false;
  }
  return true;
}

bool FinitePoset::is_downset(const ElementSet& s) const {
  for (Elem x : members(s)) {
    if (!down_[x].is_subset_of(s)) return false;
  }
  return true;
}

std::vector<std::pair<Elem, Elem>> FinitePoset::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  const std::size_t n = size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y : members(up_[x])) {
      if (y == x) continue;
      // y covers x iff the open interval (x, y) is empty
      ElementSet between = up_[x] & down_[y];
      if (between.count() == 2) out.emplace_back(x, y);
    }
  }
  return out;
}

std::optional<Elem> FinitePoset::maximum(const ElementSet& s) const {
  if (s.none()) return std::nullopt;
  // the maximum, if any, is the member latest in the linear extension
  Elem best = 0;
  bool have = false;
  for (Elem x : members(s)) {
    if (!have || rank_[x] > rank_[best]) {
      best = x;
      have = true;
    }
  }
  if (!s.is_subset_of(down_[best])) return std::nullopt;
  return best;
}

std::optional<Elem> FinitePoset::minimum(const ElementSet& s) const {
  if (s.none()) return std::nullopt;
  Elem best = 0;
  bool have = false;
  for (Elem x : members(s)) {
    if (!have || rank_[x] < rank_[best]) {
      best = x;
      have = true;
    }
  }
  if (!s.is_subset_of(up_[best])) return std::nullopt;
  return best;
}

}  // namespace tensaheyt
