#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tensaheyt {

/// One verified condition: its id, verdict and (on failure) the first
/// counterexample as name=value pairs.
struct Finding {
  std::string check;
  bool pass = true;
  std::vector<std::pair<std::string, std::string>> witness;

  /// `T7 PASS` or `T7 FAIL x=c y=d`.
  std::string to_line() const;
};

/// Ordered list of findings. Used for axiom reports and every other
/// exhaustive check; an empty failure list means the object qualifies.
struct Report {
  std::vector<Finding> findings;

  bool all_pass() const;
  const Finding* find(const std::string& check) const;
  void add(Finding f) { findings.push_back(std::move(f)); }
  void append(const Report& other);

  /// One line per finding, newline terminated.
  std::string to_text() const;
};

using AxiomReport = Report;

}  // namespace tensaheyt
