#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace tensaheyt {

/// Dense element id. Carriers are always 0..n-1.
using Elem = std::uint32_t;

/// Subset of a carrier, one bit per element id.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

ElementSet make_set(std::size_t n, std::initializer_list<Elem> members);
ElementSet make_set(std::size_t n, const std::vector<Elem>& members);
ElementSet full_set(std::size_t n);

/// Members in increasing id order.
std::vector<Elem> members(const ElementSet& s);

/// Total order on equal-width sets: compares as unsigned integers with
/// element 0 as the least significant bit.
bool numeric_less(const ElementSet& a, const ElementSet& b);

struct NumericLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const { return numeric_less(a, b); }
};

/// Renders `{x,y,...}` using the given display names.
std::string format_set(const ElementSet& s, const std::vector<std::string>& names);

}  // namespace tensaheyt
