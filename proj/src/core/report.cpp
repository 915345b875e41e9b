#include "tensaheyt/report.hpp"

#include <algorithm>

namespace tensaheyt {

std::string Finding::to_line() const {
  std::string line = check + (pass ? " PASS" : " FAIL");
  for (const auto& [k, v] : witness) line += " " + k + "=" + v;
  return line;
}

bool Report::all_pass() const {
  return std::all_of(findings.begin(), findings.end(), [](const Finding& f) { return f.pass; });
}

const Finding* Report::find(const std::string& check) const {
  for (const auto& f : findings) {
    if (f.check == check) return &f;
  }
  return nullptr;
}

void Report::append(const Report& other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& f : findings) out += f.to_line() + "\n";
  return out;
}

}  // namespace tensaheyt
