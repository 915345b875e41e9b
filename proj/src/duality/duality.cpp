#include "tensaheyt/duality.hpp"

#include <map>

#include "tensaheyt/errors.hpp"

namespace tensaheyt {
namespace {

using Witness = std::vector<std::pair<std::string, std::string>>;

std::string failures(const Report& r) {
  std::string out;
  for (const auto& f : r.findings) {
    if (!f.pass) out += f.to_line() + "\n";
  }
  return out;
}

FinitePoset inclusion_order(std::vector<std::string> names, const std::vector<ElementSet>& sets) {
  const std::size_t n = sets.size();
  std::vector<ElementSet> up(n, ElementSet(n));
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      if (sets[i].is_subset_of(sets[j])) up[i].set(j);
    }
  }
  return FinitePoset::from_up_rows(std::move(names), std::move(up), false);
}

}  // namespace

Relation spectral_relation_fg(const TenseHAlgebra& a, const std::vector<Filter>& primes) {
  Relation r(primes.size());
  for (Elem s = 0; s < primes.size(); ++s) {
    const ElementSet f_pre = a.preimage(TenseOp::f, primes[s].members);
    const ElementSet g_pre = a.preimage(TenseOp::g, primes[s].members);
    for (Elem t = 0; t < primes.size(); ++t) {
      const ElementSet outside_t = ~primes[t].members;
      if (f_pre.is_subset_of(outside_t) && outside_t.is_subset_of(g_pre)) r.set(s, t);
    }
  }
  return r;
}

Relation spectral_relation_ph(const TenseHAlgebra& a, const std::vector<Filter>& primes) {
  Relation r(primes.size());
  for (Elem t = 0; t < primes.size(); ++t) {
    const ElementSet p_pre = a.preimage(TenseOp::p, primes[t].members);
    const ElementSet h_pre = a.preimage(TenseOp::h, primes[t].members);
    for (Elem s = 0; s < primes.size(); ++s) {
      const ElementSet outside_s = ~primes[s].members;
      if (p_pre.is_subset_of(outside_s) && outside_s.is_subset_of(h_pre)) r.set(s, t);
    }
  }
  return r;
}

DualSpace dual_space(const TenseHAlgebra& a) {
  auto primes = enumerate_prime_filters(a.lattice());
  std::vector<std::string> names;
  std::vector<ElementSet> sets;
  for (const auto& p : primes) {
    names.push_back("^" + a.name(generator(a.lattice(), p)));
    sets.push_back(p.members);
  }
  Relation r = spectral_relation_fg(a, primes);
  return DualSpace{TenseHSpace{inclusion_order(std::move(names), sets), std::move(r)}, std::move(primes)};
}

DualAlgebra dual_algebra(const TenseHSpace& x, const Limits& limits) {
  const Report axioms = check_space_axioms(x, limits);
  if (!axioms.all_pass()) throw SpaceAxiomViolation(failures(axioms));

  auto upsets = enumerate_upsets(x.poset, limits.max_elements);
  const std::size_t n = upsets.size();
  std::map<ElementSet, Elem, NumericLess> index;
  std::vector<std::string> names;
  for (Elem i = 0; i < n; ++i) {
    index.emplace(upsets[i], i);
    names.push_back(format_set(upsets[i], x.names()));
  }
  auto id = [&](const ElementSet& s) { return index.at(s); };

  std::vector<Elem> meet(n * n), join(n * n), imp(n * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      meet[i * n + j] = id(upsets[i] & upsets[j]);
      join[i * n + j] = id(upsets[i] | upsets[j]);
      imp[i * n + j] = id(~x.poset.down_closure(upsets[i] - upsets[j]));
    }
  }
  const Relation conv = x.r.converse();
  std::array<OpTable, 4> ops;
  for (auto& t : ops) t.resize(n);
  for (Elem i = 0; i < n; ++i) {
    ops[0][i] = id(frame_g(x.r, upsets[i]));
    ops[1][i] = id(frame_h(conv, upsets[i]));
    ops[2][i] = id(frame_f(x.r, upsets[i]));
    ops[3][i] = id(frame_p(conv, upsets[i]));
  }
  const Elem bot = id(ElementSet(x.size()));
  const Elem top = id(full_set(x.size()));
  FiniteLattice lattice(inclusion_order(std::move(names), upsets), std::move(meet), std::move(join), bot, top);
  return DualAlgebra{TenseHAlgebra(HeytingAlgebra(std::move(lattice), std::move(imp)), std::move(ops)),
                     std::move(upsets)};
}

AlgebraRoundTrip sigma(const TenseHAlgebra& a, const Limits& limits) {
  DualSpace spectrum = dual_space(a);
  DualAlgebra algebra = dual_algebra(spectrum.space, limits);
  std::map<ElementSet, Elem, NumericLess> index;
  for (Elem i = 0; i < algebra.upsets.size(); ++i) index.emplace(algebra.upsets[i], i);

  AlgebraMorphism map{std::vector<Elem>(a.size())};
  for (Elem x = 0; x < a.size(); ++x) {
    ElementSet containing(spectrum.primes.size());
    for (Elem i = 0; i < spectrum.primes.size(); ++i) {
      if (spectrum.primes[i].members.test(x)) containing.set(i);
    }
    auto it = index.find(containing);
    if (it == index.end()) throw IsomorphismFailure("sigma(" + a.name(x) + ") is not an upset of the spectrum");
    map.map[x] = it->second;
  }
  Report verification = check_isomorphism(a, algebra.algebra, map);
  if (!verification.all_pass()) throw IsomorphismFailure("sigma is not an isomorphism:\n" + failures(verification));
  return AlgebraRoundTrip{std::move(spectrum), std::move(algebra), std::move(map), std::move(verification)};
}

SpaceRoundTrip epsilon(const TenseHSpace& x, const Limits& limits) {
  DualAlgebra algebra = dual_algebra(x, limits);
  DualSpace spectrum = dual_space(algebra.algebra);
  std::map<ElementSet, Elem, NumericLess> index;
  for (Elem i = 0; i < spectrum.primes.size(); ++i) index.emplace(spectrum.primes[i].members, i);

  SpaceMorphism map{std::vector<Elem>(x.size())};
  for (Elem p = 0; p < x.size(); ++p) {
    ElementSet containing(algebra.upsets.size());
    for (Elem u = 0; u < algebra.upsets.size(); ++u) {
      if (algebra.upsets[u].test(p)) containing.set(u);
    }
    auto it = index.find(containing);
    if (it == index.end()) throw IsomorphismFailure("epsilon(" + x.name(p) + ") is not a prime filter");
    map.map[p] = it->second;
  }

  Report v;
  Finding bij{"bijective", x.size() == spectrum.space.size(), {}};
  ElementSet hit(spectrum.space.size());
  for (Elem p = 0; p < x.size() && bij.pass; ++p) {
    if (hit.test(map(p))) {
      bij.pass = false;
      bij.witness = Witness{{"x", x.name(p)}};
    }
    hit.set(map(p));
  }
  Finding order{"order", true, {}};
  Finding forward{"relation-forward", true, {}};
  Finding backward{"relation-backward", true, {}};
  const auto& target = spectrum.space;
  for (Elem p = 0; p < x.size(); ++p) {
    for (Elem q = 0; q < x.size(); ++q) {
      const Witness w{{"x", x.name(p)}, {"y", x.name(q)}};
      if (order.pass && x.poset.leq(p, q) != target.poset.leq(map(p), map(q))) {
        order.pass = false;
        order.witness = w;
      }
      const bool in_x = x.r.test(p, q);
      const bool in_target = target.r.test(map(p), map(q));
      if (forward.pass && in_x && !in_target) {
        forward.pass = false;
        forward.witness = w;
      }
      if (backward.pass && !in_x && in_target) {
        backward.pass = false;
        backward.witness = w;
      }
    }
  }
  v.add(std::move(bij));
  v.add(std::move(order));
  v.add(std::move(forward));
  v.add(std::move(backward));
  if (!v.all_pass()) throw IsomorphismFailure("epsilon is not an isomorphism:\n" + failures(v));
  return SpaceRoundTrip{std::move(algebra), std::move(spectrum), std::move(map), std::move(v)};
}

SpaceMorphism dual_morphism(const TenseHAlgebra& a1, const DualSpace& x1, const TenseHAlgebra& a2,
                            const DualSpace& x2, const AlgebraMorphism& k) {
  const Report hom = check_homomorphism(a1, a2, k);
  if (!hom.all_pass()) throw NotAHomomorphism(failures(hom));
  std::map<ElementSet, Elem, NumericLess> index;
  for (Elem i = 0; i < x1.primes.size(); ++i) index.emplace(x1.primes[i].members, i);

  SpaceMorphism out{std::vector<Elem>(x2.primes.size())};
  for (Elem s = 0; s < x2.primes.size(); ++s) {
    ElementSet pre(a1.size());
    for (Elem x = 0; x < a1.size(); ++x) {
      if (x2.primes[s].members.test(k(x))) pre.set(x);
    }
    auto it = index.find(pre);
    if (it == index.end()) throw NotAHomomorphism("preimage of " + x2.space.name(s) + " is not prime");
    out.map[s] = it->second;
  }
  return out;
}

}  // namespace tensaheyt
