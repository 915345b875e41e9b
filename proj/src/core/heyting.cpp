#include "tensaheyt/heyting.hpp"

#include "tensaheyt/errors.hpp"

namespace tensaheyt {

HeytingAlgebra::HeytingAlgebra(FiniteLattice lattice, std::vector<Elem> imp)
    : lattice_(std::move(lattice)), imp_(std::move(imp)) {}

std::optional<std::array<Elem, 3>> distributivity_witness(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          return std::array<Elem, 3>{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Elem> relative_pseudocomplement(const FiniteLattice& l, Elem a, Elem b) {
  ElementSet candidates(l.size());
  for (Elem c = 0; c < l.size(); ++c) {
    if (l.leq(l.meet(a, c), b)) candidates.set(c);
  }
  return l.poset().maximum(candidates);
}

HeytingAlgebra heyting_implication(FiniteLattice lattice) {
  if (auto w = distributivity_witness(lattice)) {
    const auto& [x, y, z] = *w;
    throw NotDistributive("distributivity fails at x=" + lattice.name(x) + " y=" + lattice.name(y) +
                          " z=" + lattice.name(z));
  }
  const std::size_t n = lattice.size();
  std::vector<Elem> imp(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      auto c = relative_pseudocomplement(lattice, a, b);
      if (!c) {
        throw NoRelativePseudocomplement("no largest c with " + lattice.name(a) + " & c <= " + lattice.name(b));
      }
      imp[a * n + b] = *c;
    }
  }
  return HeytingAlgebra(std::move(lattice), std::move(imp));
}

HeytingAlgebra powerset_algebra(const std::vector<std::string>& point_names) {
  const std::size_t points = point_names.size();
  if (points >= 31) throw CarrierTooLarge("powerset of " + std::to_string(points) + " points");
  const std::size_t n = std::size_t{1} << points;
  const Elem all = static_cast<Elem>(n - 1);

  std::vector<std::string> names(n);
  std::vector<ElementSet> up(n, ElementSet(n));
  for (Elem m = 0; m < n; ++m) {
    std::string s = "{";
    for (std::size_t i = 0; i < points; ++i) {
      if (m & (Elem{1} << i)) {
        if (s.size() > 1) s += ',';
        s += point_names[i];
      }
    }
    names[m] = s + "}";
    // supersets of m: enumerate submasks of the complement
    const Elem rest = all & ~m;
    for (Elem sub = rest;; sub = (sub - 1) & rest) {
      up[m].set(m | sub);
      if (sub == 0) break;
    }
  }

  std::vector<Elem> meet(n * n), join(n * n), imp(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      meet[a * n + b] = a & b;
      join[a * n + b] = a | b;
      imp[a * n + b] = (all & ~a) | b;
    }
  }
  auto poset = FinitePoset::from_up_rows(std::move(names), std::move(up), /*validate=*/false);
  FiniteLattice lattice(std::move(poset), std::move(meet), std::move(join), 0, all);
  return HeytingAlgebra(std::move(lattice), std::move(imp));
}

HeytingAlgebra chain_algebra(std::size_t n) {
  if (n == 0) throw NotALattice("empty chain");
  std::vector<std::string> names(n);
  std::vector<std::pair<Elem, Elem>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      names[i] = "0";
    } else if (i + 1 == n) {
      names[i] = "1";
    } else {
      names[i] = "m" + std::to_string(i);
    }
    if (i > 0) covers.emplace_back(static_cast<Elem>(i - 1), static_cast<Elem>(i));
  }
  return heyting_implication(build_lattice(FinitePoset::from_covers(std::move(names), covers)));
}

}  // namespace tensaheyt
