#include "tensaheyt/axioms.hpp"

#include <functional>

#include "tensaheyt/filter.hpp"

namespace tensaheyt {
namespace {

Finding scan_unary(const TenseHAlgebra& a, std::string id, const std::function<bool(Elem)>& holds) {
  Finding f{std::move(id), true, {}};
  for (Elem x = 0; x < a.size(); ++x) {
    if (!holds(x)) {
      f.pass = false;
      f.witness = {{"x", a.name(x)}};
      break;
    }
  }
  return f;
}

Finding scan_binary(const TenseHAlgebra& a, std::string id, const std::function<bool(Elem, Elem)>& holds) {
  Finding f{std::move(id), true, {}};
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (!holds(x, y)) {
        f.pass = false;
        f.witness = {{"x", a.name(x)}, {"y", a.name(y)}};
        return f;
      }
    }
  }
  return f;
}

}  // namespace

AxiomReport check_axioms(const TenseHAlgebra& a) {
  AxiomReport r;
  const Elem one = a.top();
  const Elem zero = a.bot();

  Finding t1{"T1", a.g(one) == zero && a.h(one) == zero, {}};
  if (!t1.pass) t1.witness = {{"x", a.name(one)}};
  r.add(t1);

  Finding t2{"T2", a.f(zero) == one && a.p(zero) == one, {}};
  if (!t2.pass) t2.witness = {{"x", a.name(zero)}};
  r.add(t2);

  r.add(scan_binary(a, "T3", [&](Elem x, Elem y) {
    return a.g(a.meet(x, y)) == a.join(a.g(x), a.g(y)) && a.h(a.meet(x, y)) == a.join(a.h(x), a.h(y));
  }));
  r.add(scan_binary(a, "T4", [&](Elem x, Elem y) {
    return a.f(a.join(x, y)) == a.meet(a.f(x), a.f(y)) && a.p(a.join(x, y)) == a.meet(a.p(x), a.p(y));
  }));
  r.add(scan_unary(a, "T5", [&](Elem x) { return a.leq(a.g(a.h(x)), x) && a.leq(a.h(a.g(x)), x); }));
  r.add(scan_unary(a, "T6", [&](Elem x) { return a.leq(x, a.p(a.f(x))) && a.leq(x, a.f(a.p(x))); }));
  r.add(scan_binary(a, "T7", [&](Elem x, Elem y) {
    return a.leq(a.meet(a.g(x), a.f(y)), a.g(a.join(x, y))) &&
           a.leq(a.meet(a.h(x), a.p(y)), a.h(a.join(x, y)));
  }));
  r.add(scan_binary(a, "T8", [&](Elem x, Elem y) {
    return a.leq(a.f(a.meet(x, y)), a.join(a.f(x), a.g(y))) &&
           a.leq(a.p(a.meet(x, y)), a.join(a.p(x), a.h(y)));
  }));
  return r;
}

AxiomReport check_derived_laws(const TenseHAlgebra& a) {
  AxiomReport r;
  r.add(scan_binary(a, "T9", [&](Elem x, Elem y) {
    return !a.leq(x, y) || (a.leq(a.g(y), a.g(x)) && a.leq(a.h(y), a.h(x)));
  }));
  r.add(scan_binary(a, "T10", [&](Elem x, Elem y) {
    return !a.leq(x, y) || (a.leq(a.f(y), a.f(x)) && a.leq(a.p(y), a.p(x)));
  }));
  r.add(scan_binary(a, "T11", [&](Elem x, Elem y) { return a.leq(a.g(x), y) == a.leq(a.h(y), x); }));
  r.add(scan_binary(a, "T12", [&](Elem x, Elem y) { return a.leq(x, a.p(y)) == a.leq(y, a.f(x)); }));
  r.add(scan_binary(a, "T13", [&](Elem x, Elem y) {
    return a.leq(a.h(a.imp(a.imp(a.g(x), y), y)), x) && a.leq(a.g(a.imp(a.imp(a.h(x), y), y)), x);
  }));
  r.add(scan_binary(a, "T14", [&](Elem x, Elem y) {
    return a.leq(y, a.f(a.meet(x, a.p(y)))) && a.leq(y, a.p(a.meet(x, a.f(y))));
  }));
  return r;
}

Report check_prime_preimages(const TenseHAlgebra& a) {
  const auto& l = a.lattice();
  Report r;
  auto first_failure = [&](const std::vector<Filter>& filters, auto&& holds) {
    Finding f;
    for (const auto& s : filters) {
      if (!holds(s.members)) {
        f.pass = false;
        f.witness = {{"S", "^" + a.name(generator(l, s))}};
        break;
      }
    }
    return f;
  };

  const auto filters = enumerate_filters(l);
  const auto primes = enumerate_prime_filters(l);
  for (TenseOp op : {TenseOp::f, TenseOp::p}) {
    auto f = first_failure(filters, [&](const ElementSet& s) { return is_ideal(l, a.preimage(op, s)); });
    f.check = std::string(op_name(op)) + "-preimage-ideal";
    r.add(std::move(f));
  }
  for (TenseOp op : {TenseOp::g, TenseOp::h}) {
    auto f = first_failure(primes, [&](const ElementSet& s) { return is_filter(l, ~a.preimage(op, s)); });
    f.check = std::string(op_name(op)) + "-preimage-cofilter";
    r.add(std::move(f));
  }
  return r;
}

}  // namespace tensaheyt
