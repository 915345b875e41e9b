#include "tensaheyt/semantics.hpp"

#include <algorithm>

#include "tensaheyt/errors.hpp"
#include "tensaheyt/parser.hpp"

namespace tensaheyt {
namespace {

// Variables resolved to slots once so the scan does not touch the map.
Elem eval_slots(const Formula& f, const TenseHAlgebra& a, const std::vector<unsigned>& vars,
                const std::vector<Elem>& values) {
  switch (f.kind()) {
    case Formula::Kind::Var: {
      const auto it = std::lower_bound(vars.begin(), vars.end(), f.var_index());
      return values[static_cast<std::size_t>(it - vars.begin())];
    }
    case Formula::Kind::Bot: return a.bot();
    case Formula::Kind::Top: return a.top();
    case Formula::Kind::And: return a.meet(eval_slots(f.lhs(), a, vars, values), eval_slots(f.rhs(), a, vars, values));
    case Formula::Kind::Or: return a.join(eval_slots(f.lhs(), a, vars, values), eval_slots(f.rhs(), a, vars, values));
    case Formula::Kind::Imp: return a.imp(eval_slots(f.lhs(), a, vars, values), eval_slots(f.rhs(), a, vars, values));
    default: return a.apply(f.op(), eval_slots(f.lhs(), a, vars, values));
  }
}

}  // namespace

Elem eval(const Formula& f, const TenseHAlgebra& a, const Assignment& m) {
  const auto vars = f.variables();
  std::vector<Elem> values;
  for (unsigned v : vars) {
    const auto it = m.find(v);
    if (it == m.end()) throw UnboundVariable("x" + std::to_string(v) + " has no value");
    if (it->second >= a.size()) throw UnboundVariable("x" + std::to_string(v) + " is bound outside the carrier");
    values.push_back(it->second);
  }
  return eval_slots(f, a, vars, values);
}

std::string format_assignment(const TenseHAlgebra& a, const Assignment& m) {
  std::string out;
  for (const auto& [v, e] : m) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(v) + "=" + a.name(e);
  }
  return out;
}

Validity is_valid(const Formula& f, const TenseHAlgebra& a, const Limits& limits) {
  const auto vars = f.variables();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    space *= a.size();
    if (space > limits.max_evaluations) {
      throw AssignmentSpaceTooLarge(std::to_string(a.size()) + "^" + std::to_string(vars.size()) +
                                    " assignments exceed the cap of " + std::to_string(limits.max_evaluations));
    }
  }

  Validity v;
  std::vector<Elem> values(vars.size(), 0);
  while (true) {
    ++v.evaluations;
    const Elem result = eval_slots(f, a, vars, values);
    if (result != a.top()) {
      v.valid = false;
      v.value = result;
      Assignment m;
      for (std::size_t i = 0; i < vars.size(); ++i) m[vars[i]] = values[i];
      v.countermodel = std::move(m);
      return v;
    }
    // odometer, last variable fastest
    std::size_t i = vars.size();
    while (i > 0 && ++values[i - 1] == a.size()) values[--i] = 0;
    if (i == 0) break;
  }
  return v;
}

std::optional<Countermodel> countermodel_search(const Formula& f, const std::vector<NamedAlgebra>& corpus,
                                                const Limits& limits) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto v = is_valid(f, corpus[i].algebra, limits);
    if (!v.valid) return Countermodel{corpus[i].name, i, std::move(*v.countermodel), v.value};
  }
  return std::nullopt;
}

std::optional<Countermodel> countermodel_search_frames(const Formula& f, std::size_t max_points,
                                                       const Limits& limits) {
  std::optional<Countermodel> found;
  std::size_t position = 0;
  for_each_frame(
      max_points,
      [&](NamedAlgebra a) {
        auto v = is_valid(f, a.algebra, limits);
        if (!v.valid) found = Countermodel{a.name, position, std::move(*v.countermodel), v.value};
        ++position;
        return v.valid;
      },
      limits);
  return found;
}

Report check_rules_soundness(const TenseHAlgebra& a) {
  Finding mp{"MP", true, {}};
  Finding rn1{"RN1", true, {}};
  Finding rn2{"RN2", true, {}};
  const Elem one = a.top();
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      const std::vector<std::pair<std::string, std::string>> w{{"a", a.name(x)}, {"b", a.name(y)}};
      if (mp.pass && x == one && a.imp(x, y) == one && y != one) {
        mp.pass = false;
        mp.witness = w;
      }
      if (rn1.pass && a.imp(x, a.f(y)) == one && a.imp(y, a.p(x)) != one) {
        rn1.pass = false;
        rn1.witness = w;
      }
      if (rn2.pass && a.imp(a.g(x), y) == one && a.imp(a.h(y), x) != one) {
        rn2.pass = false;
        rn2.witness = w;
      }
    }
  }
  Report r;
  r.add(std::move(mp));
  r.add(std::move(rn1));
  r.add(std::move(rn2));
  return r;
}

std::vector<NamedFormula> tense_axiom_schemes() {
  return {
      {"g-join", parse_formula("g x1 & f x2 -> g (x1 | x2)")},
      {"f-meet", parse_formula("f (x1 & x2) -> f x1 | g x2")},
      {"h-join", parse_formula("h x1 & p x2 -> h (x1 | x2)")},
      {"p-meet", parse_formula("p (x1 & x2) -> p x1 | h x2")},
  };
}

}  // namespace tensaheyt
