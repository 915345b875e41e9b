#include "tensaheyt/congruence.hpp"

#include <functional>
#include <map>

#include "tensaheyt/errors.hpp"

namespace tensaheyt {

Congruence Congruence::from_labels(const std::vector<Elem>& labels) {
  std::map<Elem, Elem> first_member;
  std::vector<Elem> canonical(labels.size());
  for (Elem x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = first_member.emplace(labels[x], x);
    canonical[x] = it->second;
  }
  return Congruence(std::move(canonical));
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<Elem> c(n);
  for (Elem x = 0; x < n; ++x) c[x] = x;
  return Congruence(std::move(c));
}

Congruence Congruence::total(std::size_t n) { return Congruence(std::vector<Elem>(n, 0)); }

std::size_t Congruence::class_count() const { return representatives().size(); }

std::vector<Elem> Congruence::representatives() const {
  std::vector<Elem> reps;
  for (Elem x = 0; x < size(); ++x) {
    if (class_of_[x] == x) reps.push_back(x);
  }
  return reps;
}

bool Congruence::refines(const Congruence& coarser) const {
  for (Elem x = 0; x < size(); ++x) {
    if (!coarser.related(x, class_of_[x])) return false;
  }
  return true;
}

Finding check_compatibility(const TenseHAlgebra& a, const Congruence& theta) {
  Finding f{"compatible", true, {}};
  const std::size_t n = a.size();
  using Binary = std::function<Elem(Elem, Elem)>;
  const std::pair<const char*, Binary> binary[] = {
      {"meet", [&](Elem x, Elem y) { return a.meet(x, y); }},
      {"join", [&](Elem x, Elem y) { return a.join(x, y); }},
      {"imp", [&](Elem x, Elem y) { return a.imp(x, y); }},
  };
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (x == y || !theta.related(x, y)) continue;
      for (TenseOp u : kTenseOps) {
        if (!theta.related(a.apply(u, x), a.apply(u, y))) {
          f.pass = false;
          f.witness = {{"op", std::string(op_name(u))}, {"x", a.name(x)}, {"y", a.name(y)}};
          return f;
        }
      }
      // x ~ y must give x*z ~ y*z and z*x ~ z*y
      for (Elem z = 0; z < n; ++z) {
        for (const auto& [name, op] : binary) {
          if (!theta.related(op(x, z), op(y, z)) || !theta.related(op(z, x), op(z, y))) {
            f.pass = false;
            f.witness = {{"op", name}, {"x", a.name(x)}, {"y", a.name(y)}, {"z", a.name(z)}};
            return f;
          }
        }
      }
    }
  }
  return f;
}

Congruence congruence_from_filter(const TenseHAlgebra& a, const TenseFilter& f) {
  if (!is_tense_filter(a, f.base).is_tense) throw NotATenseFilter("filter is not closed under the tense operators");
  const std::size_t n = a.size();
  std::vector<Elem> labels(n);
  for (Elem x = 0; x < n; ++x) {
    labels[x] = x;
    for (Elem y = 0; y < x; ++y) {
      if (f.members().test(a.iff(x, y))) {
        labels[x] = labels[y];
        break;
      }
    }
  }
  return Congruence::from_labels(labels);
}

TenseFilter filter_from_congruence(const TenseHAlgebra& a, const Congruence& theta) {
  if (theta.size() != a.size()) throw NotACongruence("partition size does not match the carrier");
  const auto compat = check_compatibility(a, theta);
  if (!compat.pass) throw NotACongruence("partition is not compatible: " + compat.to_line());
  ElementSet top_class(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    if (theta.related(x, a.top())) top_class.set(x);
  }
  return TenseFilter{Filter{top_class}};
}

CongruenceLattice congruence_lattice(const TenseHAlgebra& a) {
  CongruenceLattice out;
  out.filters = enumerate_tense_filters(a);
  for (const auto& f : out.filters) {
    auto theta = congruence_from_filter(a, f);
    if (filter_from_congruence(a, theta) != f) {
      throw IsomorphismFailure("[1] of theta_F differs from F for F = " + format_set(f.members(), a.names()));
    }
    out.congruences.push_back(std::move(theta));
  }
  const std::size_t m = out.filters.size();
  out.contained.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const bool by_filter = out.filters[i].members().is_subset_of(out.filters[j].members());
      const bool by_partition = out.congruences[i].refines(out.congruences[j]);
      if (by_filter != by_partition) {
        throw IsomorphismFailure("filter inclusion and congruence refinement disagree");
      }
      out.contained[i][j] = by_partition;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (out.congruences[i] == out.congruences[j]) throw IsomorphismFailure("two tense filters share a congruence");
    }
  }
  return out;
}

std::optional<Elem> simplicity_witness(const TenseHAlgebra& a) {
  const auto n = box_N(a);
  for (Elem x = 0; x < a.size(); ++x) {
    if (x != a.top() && box_N_limit(a, n, x) != a.bot()) return x;
  }
  return std::nullopt;
}

bool is_simple(const TenseHAlgebra& a) { return !simplicity_witness(a).has_value(); }

bool is_subdirectly_irreducible(const TenseHAlgebra& a) {
  const auto n = box_N(a);
  std::vector<Elem> limits;
  for (Elem x = 0; x < a.size(); ++x) {
    if (x != a.top()) limits.push_back(box_N_limit(a, n, x));
  }
  for (Elem b = 0; b < a.size(); ++b) {
    if (b == a.top()) continue;
    bool bounds_all = true;
    for (Elem l : limits) {
      if (!a.leq(l, b)) {
        bounds_all = false;
        break;
      }
    }
    if (bounds_all) return true;
  }
  return false;
}

Quotient quotient(const TenseHAlgebra& a, const Congruence& theta) {
  const auto compat = check_compatibility(a, theta);
  if (theta.size() != a.size() || !compat.pass) throw NotACongruence("cannot form quotient: " + compat.to_line());
  const auto reps = theta.representatives();
  const std::size_t m = reps.size();
  if (m < 2) throw DegenerateAlgebra("quotient by the total congruence is trivial");

  std::vector<Elem> index_of_rep(a.size(), 0);
  for (Elem i = 0; i < m; ++i) index_of_rep[reps[i]] = i;
  std::vector<Elem> projection(a.size());
  for (Elem x = 0; x < a.size(); ++x) projection[x] = index_of_rep[theta.class_of(x)];
  auto cls = [&](Elem x) { return projection[x]; };

  std::vector<std::string> names(m);
  std::vector<ElementSet> up(m, ElementSet(m));
  std::vector<Elem> meet(m * m), join(m * m), imp(m * m);
  std::array<OpTable, 4> ops;
  for (auto& t : ops) t.assign(m, 0);
  for (Elem i = 0; i < m; ++i) {
    const Elem x = reps[i];
    names[i] = "[" + a.name(x) + "]";
    for (std::size_t o = 0; o < 4; ++o) ops[o][i] = cls(a.apply(kTenseOps[o], x));
    for (Elem j = 0; j < m; ++j) {
      const Elem y = reps[j];
      meet[i * m + j] = cls(a.meet(x, y));
      join[i * m + j] = cls(a.join(x, y));
      imp[i * m + j] = cls(a.imp(x, y));
      if (cls(a.meet(x, y)) == i) up[i].set(j);  // [x] <= [y] iff x & y ~ x
    }
  }
  auto poset = FinitePoset::from_up_rows(std::move(names), std::move(up));
  FiniteLattice lattice(std::move(poset), std::move(meet), std::move(join), cls(a.bot()), cls(a.top()));
  return Quotient{TenseHAlgebra(HeytingAlgebra(std::move(lattice), std::move(imp)), std::move(ops)),
                  std::move(projection)};
}

}  // namespace tensaheyt
