#pragma once

#include <cstddef>
#include <cstdint>

namespace tensaheyt {

/// Size caps for constructions and exhaustive scans.
struct Limits {
  /// Largest carrier a construction may produce (powerset frame algebras).
  std::size_t max_elements = std::size_t{1} << 12;
  /// Largest assignment space a single validity query may scan.
  std::uint64_t max_evaluations = 1'000'000;

  /// Defaults, with `TENSAHEYT_MAX_ELEMENTS` overriding max_elements.
  static Limits from_environment();
};

}  // namespace tensaheyt
