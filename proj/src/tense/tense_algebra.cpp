#include "tensaheyt/tense_algebra.hpp"

#include <string>

#include "tensaheyt/errors.hpp"

namespace tensaheyt {

std::string_view op_name(TenseOp op) {
  switch (op) {
    case TenseOp::g: return "g";
    case TenseOp::h: return "h";
    case TenseOp::f: return "f";
    case TenseOp::p: return "p";
  }
  return "?";
}

std::optional<TenseOp> op_from_name(std::string_view name) {
  for (TenseOp op : kTenseOps) {
    if (op_name(op) == name) return op;
  }
  return std::nullopt;
}

TenseHAlgebra::TenseHAlgebra(HeytingAlgebra heyting, std::array<OpTable, 4> ops)
    : heyting_(std::move(heyting)), ops_(std::move(ops)) {
  const std::size_t n = heyting_.size();
  if (n < 2 || heyting_.bot() == heyting_.top()) {
    throw DegenerateAlgebra("a tense H-algebra needs 0 != 1");
  }
  for (TenseOp op : kTenseOps) {
    const auto& t = table(op);
    if (t.size() != n) {
      throw FormatError("operator " + std::string(op_name(op)) + " table has " + std::to_string(t.size()) +
                        " entries, expected " + std::to_string(n));
    }
    for (Elem v : t) {
      if (v >= n) throw FormatError("operator " + std::string(op_name(op)) + " maps outside the carrier");
    }
  }
}

ElementSet TenseHAlgebra::preimage(TenseOp op, const ElementSet& s) const {
  ElementSet out(size());
  const auto& t = table(op);
  for (Elem x = 0; x < size(); ++x) {
    if (s.test(t[x])) out.set(x);
  }
  return out;
}

}  // namespace tensaheyt
