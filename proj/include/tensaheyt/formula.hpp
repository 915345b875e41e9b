#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tensaheyt/tense_algebra.hpp"

namespace tensaheyt {

/// Immutable IGN formula; subtrees are shared.
class Formula {
 public:
  enum class Kind { Var, Bot, Top, And, Or, Imp, G, H, F, P };

  static Formula var(unsigned index);
  static Formula bot();
  static Formula top();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula unary(TenseOp op, Formula a);
  /// a -> bot
  static Formula neg(Formula a);
  /// (a -> b) & (b -> a)
  static Formula iff(Formula a, Formula b);

  Kind kind() const { return node_->kind; }
  bool is_binary() const;
  bool is_tense() const;
  /// Only for Var.
  unsigned var_index() const { return node_->index; }
  /// Only for G, H, F, P.
  TenseOp op() const;
  /// Left operand of a binary node, or the operand of a unary one.
  const Formula& lhs() const { return node_->children[0]; }
  const Formula& rhs() const { return node_->children[1]; }

  /// Distinct variable indices in increasing order.
  std::vector<unsigned> variables() const;
  std::size_t node_count() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    unsigned index = 0;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::vector<Formula> children, unsigned index = 0);

  std::shared_ptr<const Node> node_;
};

/// Prints with the fewest parentheses that parse back to the same tree.
/// `x -> bot` prints as `~x`.
std::string to_string(const Formula& f);

}  // namespace tensaheyt
