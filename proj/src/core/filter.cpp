#include "tensaheyt/filter.hpp"

#include "tensaheyt/errors.hpp"

namespace tensaheyt {

Filter principal_filter(const FiniteLattice& l, Elem x) { return Filter{l.poset().up(x)}; }

Ideal principal_ideal(const FiniteLattice& l, Elem x) { return Ideal{l.poset().down(x)}; }

bool is_filter(const FiniteLattice& l, const ElementSet& s) {
  if (s.size() != l.size() || s.none() || !l.poset().is_upset(s)) return false;
  const auto m = members(s);
  for (Elem a : m) {
    for (Elem b : m) {
      if (!s.test(l.meet(a, b))) return false;
    }
  }
  return true;
}

bool is_ideal(const FiniteLattice& l, const ElementSet& s) {
  if (s.size() != l.size() || s.none() || !l.poset().is_downset(s)) return false;
  const auto m = members(s);
  for (Elem a : m) {
    for (Elem b : m) {
      if (!s.test(l.join(a, b))) return false;
    }
  }
  return true;
}

bool is_prime_filter(const FiniteLattice& l, const ElementSet& s) {
  if (!is_filter(l, s) || s.test(l.bot())) return false;
  const std::size_t n = l.size();
  for (Elem a = 0; a < n; ++a) {
    if (s.test(a)) continue;
    for (Elem b = 0; b < n; ++b) {
      if (!s.test(b) && s.test(l.join(a, b))) return false;
    }
  }
  return true;
}

Elem generator(const FiniteLattice& l, const Filter& f) { return l.meet_all(f.members); }

std::vector<Filter> enumerate_filters(const FiniteLattice& l) {
  std::vector<Filter> out;
  out.reserve(l.size());
  for (Elem x = 0; x < l.size(); ++x) out.push_back(principal_filter(l, x));
  return out;
}

std::vector<Filter> enumerate_prime_filters(const FiniteLattice& l) {
  std::vector<Filter> out;
  for (Elem x = 0; x < l.size(); ++x) {
    auto f = principal_filter(l, x);
    if (is_prime_filter(l, f.members)) out.push_back(std::move(f));
  }
  return out;
}

Filter filter_ideal_separation(const FiniteLattice& l, const Filter& f, const Ideal& i) {
  if (!is_filter(l, f.members)) throw NotAFilter("separation: first argument is not a filter");
  if (!is_ideal(l, i.members)) throw NotAFilter("separation: second argument is not an ideal");
  if (f.members.intersects(i.members)) throw NotDisjoint("filter and ideal are not disjoint");
  for (auto& p : enumerate_prime_filters(l)) {
    if (f.members.is_subset_of(p.members) && !p.members.intersects(i.members)) return p;
  }
  // unreachable on a distributive lattice (prime filter theorem)
  throw NotDistributive("no separating prime filter; lattice is not distributive");
}

}  // namespace tensaheyt
