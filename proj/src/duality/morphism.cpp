#include "tensaheyt/morphism.hpp"

#include <functional>
#include <string>
#include <tuple>

#include "tensaheyt/errors.hpp"

namespace tensaheyt {
namespace {

using Witness = std::vector<std::pair<std::string, std::string>>;

void require_total(const std::vector<Elem>& map, std::size_t from, std::size_t to) {
  if (map.size() != from) throw FormatError("map has " + std::to_string(map.size()) + " entries, expected " + std::to_string(from));
  for (Elem v : map) {
    if (v >= to) throw FormatError("map sends an element outside the codomain");
  }
}

ElementSet image(const std::vector<Elem>& map, const ElementSet& s, std::size_t to) {
  ElementSet out(to);
  for (Elem x : members(s)) out.set(map[x]);
  return out;
}

ElementSet preimage(const std::vector<Elem>& map, const ElementSet& s) {
  ElementSet out(map.size());
  for (Elem x = 0; x < map.size(); ++x) {
    if (s.test(map[x])) out.set(x);
  }
  return out;
}

}  // namespace

AlgebraMorphism compose(const AlgebraMorphism& k1, const AlgebraMorphism& k2) {
  AlgebraMorphism out{std::vector<Elem>(k1.map.size())};
  for (std::size_t x = 0; x < k1.map.size(); ++x) out.map[x] = k2.map.at(k1.map[x]);
  return out;
}

SpaceMorphism compose(const SpaceMorphism& k1, const SpaceMorphism& k2) {
  SpaceMorphism out{std::vector<Elem>(k1.map.size())};
  for (std::size_t x = 0; x < k1.map.size(); ++x) out.map[x] = k2.map.at(k1.map[x]);
  return out;
}

Report check_homomorphism(const TenseHAlgebra& a, const TenseHAlgebra& b, const AlgebraMorphism& k) {
  require_total(k.map, a.size(), b.size());
  Report r;
  r.add(Finding{"bot", k(a.bot()) == b.bot(), {}});
  r.add(Finding{"top", k(a.top()) == b.top(), {}});

  using Binary = std::function<Elem(const TenseHAlgebra&, Elem, Elem)>;
  const std::pair<const char*, Binary> binary[] = {
      {"meet", [](const TenseHAlgebra& t, Elem x, Elem y) { return t.meet(x, y); }},
      {"join", [](const TenseHAlgebra& t, Elem x, Elem y) { return t.join(x, y); }},
      {"imp", [](const TenseHAlgebra& t, Elem x, Elem y) { return t.imp(x, y); }},
  };
  for (const auto& [name, op] : binary) {
    Finding f{name, true, {}};
    for (Elem x = 0; x < a.size() && f.pass; ++x) {
      for (Elem y = 0; y < a.size(); ++y) {
        if (k(op(a, x, y)) != op(b, k(x), k(y))) {
          f.pass = false;
          f.witness = Witness{{"x", a.name(x)}, {"y", a.name(y)}};
          break;
        }
      }
    }
    r.add(std::move(f));
  }
  for (TenseOp u : kTenseOps) {
    Finding f{std::string(op_name(u)), true, {}};
    for (Elem x = 0; x < a.size(); ++x) {
      if (k(a.apply(u, x)) != b.apply(u, k(x))) {
        f.pass = false;
        f.witness = Witness{{"x", a.name(x)}};
        break;
      }
    }
    r.add(std::move(f));
  }
  return r;
}

Report check_isomorphism(const TenseHAlgebra& a, const TenseHAlgebra& b, const AlgebraMorphism& k) {
  Report r = check_homomorphism(a, b, k);
  Finding bij{"bijective", a.size() == b.size(), {}};
  if (bij.pass) {
    ElementSet hit(b.size());
    for (Elem x = 0; x < a.size(); ++x) {
      if (hit.test(k(x))) {
        bij.pass = false;
        bij.witness = Witness{{"image", b.name(k(x))}};
        break;
      }
      hit.set(k(x));
    }
  }
  r.add(std::move(bij));
  return r;
}

Report check_heyting_morphism(const TenseHSpace& x1, const TenseHSpace& x2, const SpaceMorphism& k) {
  require_total(k.map, x1.size(), x2.size());
  Report r;
  Finding mono{"monotone", true, {}};
  Finding up{"up-image", true, {}};
  for (Elem x = 0; x < x1.size(); ++x) {
    for (Elem y : members(x1.poset.up(x))) {
      if (mono.pass && !x2.poset.leq(k(x), k(y))) {
        mono.pass = false;
        mono.witness = Witness{{"x", x1.name(x)}, {"y", x1.name(y)}};
      }
    }
    if (up.pass && image(k.map, x1.poset.up(x), x2.size()) != x2.poset.up(k(x))) {
      up.pass = false;
      up.witness = Witness{{"x", x1.name(x)}};
    }
  }
  r.add(std::move(mono));
  r.add(std::move(up));
  return r;
}

MorphismEquivalence check_morphism_equivalence(const TenseHSpace& x1, const TenseHSpace& x2, const SpaceMorphism& k,
                                               const Limits& limits) {
  require_total(k.map, x1.size(), x2.size());
  const Relation& r1 = x1.r;
  const Relation& r2 = x2.r;
  const Relation c1 = r1.converse();
  const Relation c2 = r2.converse();

  Finding m1{"m1", true, {}};
  for (Elem x = 0; x < x1.size() && m1.pass; ++x) {
    for (Elem y : members(r1.row(x))) {
      if (!r2.test(k(x), k(y))) {
        m1.pass = false;
        m1.witness = Witness{{"x", x1.name(x)}, {"y", x1.name(y)}};
        break;
      }
    }
  }

  // m2..m5: y a successor (forward) or predecessor (backward) of k(x) in X2
  // needs some z related to x in X1 with k(z) below / above y
  auto lift = [&](const char* id, const Relation& rel1, const Relation& rel2, bool below) {
    Finding f{id, true, {}};
    for (Elem x = 0; x < x1.size(); ++x) {
      for (Elem y : members(rel2.row(k(x)))) {
        bool found = false;
        for (Elem z : members(rel1.row(x))) {
          if (below ? x2.poset.leq(k(z), y) : x2.poset.leq(y, k(z))) {
            found = true;
            break;
          }
        }
        if (!found) {
          f.pass = false;
          f.witness = Witness{{"x", x1.name(x)}, {"y", x2.name(y)}};
          return f;
        }
      }
    }
    return f;
  };

  MorphismEquivalence eq;
  eq.pointwise.add(m1);
  eq.pointwise.add(lift("m2", r1, r2, true));
  eq.pointwise.add(lift("m3", c1, c2, true));
  eq.pointwise.add(lift("m4", r1, r2, false));
  eq.pointwise.add(lift("m5", c1, c2, false));

  Finding big_m1 = m1;
  big_m1.check = "M1";
  eq.upsets.add(std::move(big_m1));
  using FrameOp = std::function<ElementSet(const Relation&, const ElementSet&)>;
  const std::tuple<const char*, FrameOp, bool> ops[] = {
      {"M2", frame_g, false}, {"M3", frame_h, true}, {"M4", frame_f, false}, {"M5", frame_p, true}};
  const auto upsets = enumerate_upsets(x2.poset, limits.max_elements);
  for (const auto& [id, op, backward] : ops) {
    Finding f{id, true, {}};
    const Relation& rel1 = backward ? c1 : r1;
    const Relation& rel2 = backward ? c2 : r2;
    for (const auto& u : upsets) {
      if (preimage(k.map, op(rel2, u)) != op(rel1, preimage(k.map, u))) {
        f.pass = false;
        f.witness = Witness{{"U", format_set(u, x2.names())}};
        break;
      }
    }
    eq.upsets.add(std::move(f));
  }

  if (eq.pointwise.all_pass() != eq.upsets.all_pass()) {
    throw EquivalenceMismatch("pointwise and upset conditions disagree:\n" + eq.pointwise.to_text() +
                              eq.upsets.to_text());
  }
  return eq;
}

}  // namespace tensaheyt
