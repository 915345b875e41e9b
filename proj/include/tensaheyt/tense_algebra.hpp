#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tensaheyt/heyting.hpp"

namespace tensaheyt {

/// The four negative tense operators.
enum class TenseOp : std::uint8_t { g = 0, h = 1, f = 2, p = 3 };

inline constexpr std::array<TenseOp, 4> kTenseOps{TenseOp::g, TenseOp::h, TenseOp::f, TenseOp::p};

std::string_view op_name(TenseOp op);
std::optional<TenseOp> op_from_name(std::string_view name);

using OpTable = std::vector<Elem>;

/// A finite Heyting algebra with unary tables for g, h, f, p.
///
/// Construction only checks that the tables are total and the carrier is
/// nondegenerate; whether the tables satisfy the tense axioms is a question
/// for check_axioms().
class TenseHAlgebra {
 public:
  TenseHAlgebra(HeytingAlgebra heyting, std::array<OpTable, 4> ops);

  const HeytingAlgebra& heyting() const noexcept { return heyting_; }
  const FiniteLattice& lattice() const noexcept { return heyting_.lattice(); }
  const FinitePoset& poset() const noexcept { return heyting_.poset(); }
  std::size_t size() const noexcept { return heyting_.size(); }
  const std::string& name(Elem x) const { return heyting_.name(x); }
  const std::vector<std::string>& names() const noexcept { return heyting_.names(); }

  bool leq(Elem a, Elem b) const { return heyting_.leq(a, b); }
  Elem meet(Elem a, Elem b) const { return heyting_.meet(a, b); }
  Elem join(Elem a, Elem b) const { return heyting_.join(a, b); }
  Elem imp(Elem a, Elem b) const { return heyting_.imp(a, b); }
  Elem neg(Elem a) const { return heyting_.neg(a); }
  Elem iff(Elem a, Elem b) const { return heyting_.iff(a, b); }
  Elem bot() const noexcept { return heyting_.bot(); }
  Elem top() const noexcept { return heyting_.top(); }

  Elem apply(TenseOp op, Elem x) const { return ops_[static_cast<std::size_t>(op)][x]; }
  Elem g(Elem x) const { return apply(TenseOp::g, x); }
  Elem h(Elem x) const { return apply(TenseOp::h, x); }
  Elem f(Elem x) const { return apply(TenseOp::f, x); }
  Elem p(Elem x) const { return apply(TenseOp::p, x); }

  const OpTable& table(TenseOp op) const { return ops_[static_cast<std::size_t>(op)]; }

  /// {x : op(x) in s}
  ElementSet preimage(TenseOp op, const ElementSet& s) const;

 private:
  HeytingAlgebra heyting_;
  std::array<OpTable, 4> ops_;
};

}  // namespace tensaheyt
