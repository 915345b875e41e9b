#pragma once

#include <vector>

#include "tensaheyt/lattice.hpp"

namespace tensaheyt {

/// Nonempty, upward closed, meet-closed subset of a lattice.
struct Filter {
  ElementSet members;
  friend bool operator==(const Filter&, const Filter&) = default;
};

/// Order dual of Filter.
struct Ideal {
  ElementSet members;
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

Filter principal_filter(const FiniteLattice& l, Elem x);
Ideal principal_ideal(const FiniteLattice& l, Elem x);

bool is_filter(const FiniteLattice& l, const ElementSet& s);
bool is_ideal(const FiniteLattice& l, const ElementSet& s);

/// Definitional test: proper filter with a v b in P implying a in P or b in P.
bool is_prime_filter(const FiniteLattice& l, const ElementSet& s);

/// Meet of all members; on a finite lattice F = up(generator(F)).
Elem generator(const FiniteLattice& l, const Filter& f);

/// All filters, i.e. up(x) for every x, ordered by generator id.
std::vector<Filter> enumerate_filters(const FiniteLattice& l);

/// The prime filters, ordered by generator id.
std::vector<Filter> enumerate_prime_filters(const FiniteLattice& l);

/// A prime filter P with F subset of P and P disjoint from I; the first
/// such in generator order. Throws NotDisjoint when F and I meet, NotAFilter
/// when the inputs are not a filter/ideal.
Filter filter_ideal_separation(const FiniteLattice& l, const Filter& f, const Ideal& i);

}  // namespace tensaheyt
