#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tensaheyt/constructions.hpp"

namespace tensaheyt {

struct NamedAlgebra {
  std::string name;
  TenseHAlgebra algebra;
};

/// The library test corpus in its fixed order:
///   extreme:2 .. extreme:6, ej2, product (2-chain x 2-chain, extreme
///   operators componentwise), then every frame algebra with 1..3 points.
std::vector<NamedAlgebra> standard_corpus();

/// Every frame algebra over 1..max_points points, relations enumerated by
/// bitmask (bit x*k+y set iff x R y).
std::vector<NamedAlgebra> frame_corpus(std::size_t max_points, const Limits& limits = {});
/// Same order, built one at a time; stops and returns false as soon as
/// `visit` returns false.
bool for_each_frame(std::size_t max_points, const std::function<bool(NamedAlgebra)>& visit, const Limits& limits = {});

/// The 4-element product used throughout the tests.
TenseHAlgebra build_boolean_product();

/// Builds an algebra from a generator spec:
///   ej2 | product | extreme:N | frame:N:EDGES
/// where EDGES is a comma separated list of `x-y` point pairs (may be empty).
/// Throws FormatError on a malformed spec.
NamedAlgebra build_from_spec(std::string_view spec, const Limits& limits = {});

/// `frame:N:EDGES` name of a frame algebra.
std::string frame_spec(std::size_t points, const Relation& r);

}  // namespace tensaheyt
