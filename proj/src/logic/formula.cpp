#include "tensaheyt/formula.hpp"

#include <set>

namespace tensaheyt {

Formula Formula::make(Kind kind, std::vector<Formula> children, unsigned index) {
  return Formula(std::make_shared<const Node>(Node{kind, index, std::move(children)}));
}

Formula Formula::var(unsigned index) { return make(Kind::Var, {}, index); }
Formula Formula::bot() { return make(Kind::Bot, {}); }
Formula Formula::top() { return make(Kind::Top, {}); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, {std::move(a), std::move(b)}); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::Or, {std::move(a), std::move(b)}); }
Formula Formula::imp(Formula a, Formula b) { return make(Kind::Imp, {std::move(a), std::move(b)}); }
Formula Formula::neg(Formula a) { return imp(std::move(a), bot()); }
Formula Formula::iff(Formula a, Formula b) { return conj(imp(a, b), imp(b, a)); }

Formula Formula::unary(TenseOp op, Formula a) {
  static constexpr Kind kinds[] = {Kind::G, Kind::H, Kind::F, Kind::P};
  return make(kinds[static_cast<std::size_t>(op)], {std::move(a)});
}

bool Formula::is_binary() const { return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Imp; }

bool Formula::is_tense() const {
  return kind() == Kind::G || kind() == Kind::H || kind() == Kind::F || kind() == Kind::P;
}

TenseOp Formula::op() const {
  switch (kind()) {
    case Kind::G: return TenseOp::g;
    case Kind::H: return TenseOp::h;
    case Kind::F: return TenseOp::f;
    default: return TenseOp::p;
  }
}

std::vector<unsigned> Formula::variables() const {
  std::set<unsigned> seen;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->kind() == Kind::Var) seen.insert(f->var_index());
    for (const auto& c : f->node_->children) stack.push_back(&c);
  }
  return {seen.begin(), seen.end()};
}

std::size_t Formula::node_count() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.node_count();
  return n;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->index == b.node_->index && a.node_->children == b.node_->children;
}

namespace {

// Binding levels: 1 implication, 2 disjunction, 3 conjunction, 4 prefix/atom.
bool is_negation(const Formula& f) { return f.kind() == Formula::Kind::Imp && f.rhs().kind() == Formula::Kind::Bot; }

int level(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Imp: return is_negation(f) ? 4 : 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    default: return 4;
  }
}

void print(const Formula& f, int required, std::string& out) {
  const bool parens = level(f) < required;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Var: out += "x" + std::to_string(f.var_index()); break;
    case Formula::Kind::Bot: out += "bot"; break;
    case Formula::Kind::Top: out += "top"; break;
    case Formula::Kind::And:
      print(f.lhs(), 3, out);
      out += " & ";
      print(f.rhs(), 4, out);
      break;
    case Formula::Kind::Or:
      print(f.lhs(), 2, out);
      out += " | ";
      print(f.rhs(), 3, out);
      break;
    case Formula::Kind::Imp:
      if (is_negation(f)) {
        out += '~';
        print(f.lhs(), 4, out);
      } else {
        print(f.lhs(), 2, out);
        out += " -> ";
        print(f.rhs(), 1, out);
      }
      break;
    default:
      out += op_name(f.op());
      out += ' ';
      print(f.lhs(), 4, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 1, out);
  return out;
}

}  // namespace tensaheyt
