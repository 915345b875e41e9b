#include "tensaheyt/spectral_checks.hpp"

#include <functional>
#include <optional>

namespace tensaheyt {
namespace {

using Witness = std::vector<std::pair<std::string, std::string>>;

Relation inclusion(const std::vector<Filter>& primes) {
  Relation le(primes.size());
  for (Elem s = 0; s < primes.size(); ++s) {
    for (Elem t = 0; t < primes.size(); ++t) {
      if (primes[s].members.is_subset_of(primes[t].members)) le.set(s, t);
    }
  }
  return le;
}

}  // namespace

Report check_spectral_relation(const TenseHAlgebra& a, const DualSpace& x) {
  Report report;
  const Relation ph = spectral_relation_ph(a, x.primes);
  Finding same{"fg-equals-ph", true, {}};
  for (Elem s = 0; s < x.primes.size() && same.pass; ++s) {
    for (Elem t = 0; t < x.primes.size(); ++t) {
      if (x.space.r.test(s, t) != ph.test(s, t)) {
        same.pass = false;
        same.witness = Witness{{"S", x.space.name(s)}, {"T", x.space.name(t)}};
        break;
      }
    }
  }
  report.add(std::move(same));

  Finding convex{"convex", true, {}};
  const auto& poset = x.space.poset;
  for (Elem s = 0; s < x.primes.size(); ++s) {
    const ElementSet& succ = x.space.r.row(s);
    if ((poset.down_closure(succ) & poset.up_closure(succ)) != succ) {
      convex.pass = false;
      convex.witness = Witness{{"S", x.space.name(s)}};
      break;
    }
  }
  report.add(std::move(convex));
  return report;
}

Report check_spectral_membership(const TenseHAlgebra& a, const DualSpace& x) {
  const Relation& r = x.space.r;
  const Relation conv = r.converse();
  const std::size_t n = x.primes.size();

  // every (want_in) / no (!want_in) neighbour of S contains a
  auto all_neighbours = [&](const Relation& rel, Elem s, Elem elem, bool want_in) {
    for (Elem t : members(rel.row(s))) {
      if (x.primes[t].members.test(elem) != want_in) return false;
    }
    return true;
  };
  struct Clause {
    const char* id;
    TenseOp op;
    bool op_in_s;  // side reads "u(a) in S" rather than "not in S"
    const Relation* rel;
  };
  const Clause clauses[] = {{"g-membership", TenseOp::g, false, &r},
                            {"h-membership", TenseOp::h, false, &conv},
                            {"f-membership", TenseOp::f, true, &r},
                            {"p-membership", TenseOp::p, true, &conv}};
  Report report;
  for (const auto& c : clauses) {
    Finding f{c.id, true, {}};
    for (Elem s = 0; s < n && f.pass; ++s) {
      for (Elem elem = 0; elem < a.size(); ++elem) {
        const bool lhs = x.primes[s].members.test(a.apply(c.op, elem)) == c.op_in_s;
        // g/h: neighbours contain a; f/p: neighbours omit a
        const bool rhs = all_neighbours(*c.rel, s, elem, !c.op_in_s);
        if (lhs != rhs) {
          f.pass = false;
          f.witness = Witness{{"S", x.space.name(s)}, {"a", a.name(elem)}};
          break;
        }
      }
    }
    report.add(std::move(f));
  }
  return report;
}

Report check_composite_forms(const TenseHAlgebra& a, const DualSpace& x) {
  const Relation& r = x.space.r;
  const Relation le = inclusion(x.primes);
  const Relation ge = le.converse();
  const Relation r_le = r.compose(le);
  const Relation ge_r = ge.compose(r);
  const Relation r_ge = r.compose(ge);
  const Relation le_r = le.compose(r);
  const std::size_t n = x.primes.size();

  std::vector<ElementSet> g_pre, h_pre, f_pre, p_pre, outside;
  for (const auto& prime : x.primes) {
    g_pre.push_back(a.preimage(TenseOp::g, prime.members));
    h_pre.push_back(a.preimage(TenseOp::h, prime.members));
    f_pre.push_back(a.preimage(TenseOp::f, prime.members));
    p_pre.push_back(a.preimage(TenseOp::p, prime.members));
    outside.push_back(~prime.members);
  }

  struct Clause {
    const char* id;
    std::function<bool(Elem, Elem)> inclusion_side;
    const Relation* composite;
  };
  const Clause clauses[] = {
      {"g-composite", [&](Elem s, Elem t) { return outside[t].is_subset_of(g_pre[s]); }, &r_le},
      {"h-composite", [&](Elem s, Elem t) { return outside[s].is_subset_of(h_pre[t]); }, &ge_r},
      {"f-composite", [&](Elem s, Elem t) { return f_pre[s].is_subset_of(outside[t]); }, &r_ge},
      {"p-composite", [&](Elem s, Elem t) { return p_pre[t].is_subset_of(outside[s]); }, &le_r},
  };
  Report report;
  for (const auto& c : clauses) {
    Finding f{c.id, true, {}};
    for (Elem s = 0; s < n && f.pass; ++s) {
      for (Elem t = 0; t < n; ++t) {
        if (c.inclusion_side(s, t) != c.composite->test(s, t)) {
          f.pass = false;
          f.witness = Witness{{"S", x.space.name(s)}, {"T", x.space.name(t)}};
          break;
        }
      }
    }
    report.add(std::move(f));
  }
  return report;
}

SeparationResult check_separation(const TenseHSpace& x, const Limits& limits) {
  SeparationResult out;
  Finding sep{"separation", true, {}};
  const auto upsets = enumerate_upsets(x.poset, limits.max_elements);
  std::vector<ElementSet> f_images, g_images;
  for (const auto& u : upsets) {
    f_images.push_back(frame_f(x.r, u));
    g_images.push_back(frame_g(x.r, u));
  }
  for (Elem p = 0; p < x.size(); ++p) {
    for (Elem q = 0; q < x.size(); ++q) {
      if (x.r.test(p, q)) continue;
      std::optional<SeparationWitness> w;
      for (std::size_t i = 0; i < upsets.size() && !w; ++i) {
        if (f_images[i].test(p) && upsets[i].test(q)) w = SeparationWitness{p, q, 'f', upsets[i]};
      }
      for (std::size_t i = 0; i < upsets.size() && !w; ++i) {
        if (!upsets[i].test(q) && !g_images[i].test(p)) w = SeparationWitness{p, q, 'g', upsets[i]};
      }
      if (w) {
        out.witnesses.push_back(std::move(*w));
      } else if (sep.pass) {
        sep.pass = false;
        sep.witness = Witness{{"x", x.name(p)}, {"y", x.name(q)}};
      }
    }
  }
  out.report.add(std::move(sep));
  return out;
}

}  // namespace tensaheyt
