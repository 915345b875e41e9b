#include "tensaheyt/tense_filter.hpp"

#include <functional>
#include <string>

#include "tensaheyt/errors.hpp"

namespace tensaheyt {
namespace {

using Witness = std::vector<std::pair<std::string, std::string>>;

Finding first_violation(const TenseHAlgebra& a, std::string check,
                        const std::function<bool(Elem, Elem, TenseOp)>& holds) {
  Finding f{std::move(check), true, {}};
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      for (TenseOp u : kTenseOps) {
        if (!holds(x, y, u)) {
          f.pass = false;
          f.witness = Witness{{"x", a.name(x)}, {"y", a.name(y)}, {"u", std::string(op_name(u))}};
          return f;
        }
      }
    }
  }
  return f;
}

}  // namespace

TenseFilterVerdict is_tense_filter(const TenseHAlgebra& a, const BoxN& n, const Filter& filter) {
  if (!is_filter(a.lattice(), filter.members)) throw NotAFilter("not a filter of the algebra");
  const ElementSet& in = filter.members;

  TenseFilterVerdict v;
  v.detail.add(first_violation(a, "reversal", [&](Elem x, Elem y, TenseOp u) {
    return !in.test(a.imp(x, y)) || in.test(a.imp(a.apply(u, y), a.apply(u, x)));
  }));
  v.detail.add(first_violation(a, "iff", [&](Elem x, Elem y, TenseOp u) {
    return !in.test(a.iff(x, y)) || in.test(a.iff(a.apply(u, x), a.apply(u, y)));
  }));
  // (a) g(x)->y in F => h(y)->x in F    (b) h(x)->y in F => g(y)->x in F
  // (c) x->p(y) in F => y->f(x) in F    (d) x->f(y) in F => y->p(x) in F
  v.detail.add(first_violation(a, "galois", [&](Elem x, Elem y, TenseOp u) {
    switch (u) {
      case TenseOp::g: return !in.test(a.imp(a.g(x), y)) || in.test(a.imp(a.h(y), x));
      case TenseOp::h: return !in.test(a.imp(a.h(x), y)) || in.test(a.imp(a.g(y), x));
      case TenseOp::p: return !in.test(a.imp(x, a.p(y))) || in.test(a.imp(y, a.f(x)));
      case TenseOp::f: return !in.test(a.imp(x, a.f(y))) || in.test(a.imp(y, a.p(x)));
    }
    return true;
  }));

  Finding box{"box-N", true, {}};
  for (Elem x : members(in)) {
    if (!in.test(n(x))) {
      box.pass = false;
      box.witness = {{"x", a.name(x)}};
      break;
    }
  }
  v.detail.add(std::move(box));

  const bool first = v.detail.findings.front().pass;
  for (const auto& f : v.detail.findings) {
    if (f.pass != first) {
      throw CharacterizationMismatch("tense filter characterizations disagree on " +
                                     format_set(in, a.names()) + ":\n" + v.detail.to_text());
    }
  }
  v.is_tense = first;
  return v;
}

TenseFilterVerdict is_tense_filter(const TenseHAlgebra& a, const Filter& f) {
  return is_tense_filter(a, box_N(a), f);
}

std::vector<TenseFilter> enumerate_tense_filters(const TenseHAlgebra& a) {
  const auto n = box_N(a);
  std::vector<TenseFilter> out;
  for (auto& f : enumerate_filters(a.lattice())) {
    if (is_tense_filter(a, n, f).is_tense) out.push_back(TenseFilter{std::move(f)});
  }
  return out;
}

TenseFilter generated_tense_filter(const TenseHAlgebra& a, const BoxN& n, const ElementSet& generators) {
  // [N]^(k) preserves meets, so one meet of all generators suffices
  const Elem m = a.lattice().meet_all(generators);
  return TenseFilter{principal_filter(a.lattice(), box_N_limit(a, n, m))};
}

TenseFilter generated_tense_filter(const TenseHAlgebra& a, const ElementSet& generators) {
  return generated_tense_filter(a, box_N(a), generators);
}

}  // namespace tensaheyt
