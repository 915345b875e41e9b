#include "tensaheyt/constructions.hpp"

#include "tensaheyt/errors.hpp"

namespace tensaheyt {

TenseHAlgebra build_frame_algebra(const std::vector<std::string>& points, const Relation& r,
                                  const Limits& limits) {
  const std::size_t k = points.size();
  if (k == 0) throw DegenerateAlgebra("frame algebra over no points has 0 = 1");
  if (r.size() != k) throw FormatError("relation size does not match the point count");
  if (k >= 31 || (std::size_t{1} << k) > limits.max_elements) {
    throw CarrierTooLarge("2^" + std::to_string(k) + " subsets exceed the cap of " +
                          std::to_string(limits.max_elements) + " elements");
  }

  auto algebra = powerset_algebra(points);
  const std::size_t n = algebra.size();
  const Elem all = static_cast<Elem>(n - 1);

  // successor masks of R and of its converse
  std::vector<Elem> succ(k, 0), pred(k, 0);
  for (auto [x, y] : r.pairs()) {
    succ[x] |= Elem{1} << y;
    pred[y] |= Elem{1} << x;
  }

  std::array<OpTable, 4> ops;
  for (auto& t : ops) t.assign(n, 0);
  for (Elem u = 0; u < n; ++u) {
    const Elem outside = all & ~u;
    for (std::size_t x = 0; x < k; ++x) {
      const Elem bit = Elem{1} << x;
      if (succ[x] & outside) ops[0][u] |= bit;     // g_R
      if (pred[x] & outside) ops[1][u] |= bit;     // h_R
      if (!(succ[x] & u)) ops[2][u] |= bit;        // f_R
      if (!(pred[x] & u)) ops[3][u] |= bit;        // p_R
    }
  }
  return TenseHAlgebra(std::move(algebra), std::move(ops));
}

TenseHAlgebra build_frame_algebra(std::size_t points, const Relation& r, const Limits& limits) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < points; ++i) names.push_back(std::to_string(i));
  return build_frame_algebra(names, r, limits);
}

TenseHAlgebra build_extreme(HeytingAlgebra h) {
  const std::size_t n = h.size();
  if (n < 2) throw DegenerateAlgebra("extreme operators need at least two elements");
  OpTable g(n), f(n);
  for (Elem x = 0; x < n; ++x) {
    g[x] = x == h.top() ? h.bot() : h.top();
    f[x] = x == h.bot() ? h.top() : h.bot();
  }
  return TenseHAlgebra(std::move(h), {g, g, f, f});
}

TenseHAlgebra build_ej2() {
  // ids: 0 a b c d 1
  std::vector<std::string> names{"0", "a", "b", "c", "d", "1"};
  enum : Elem { Z, A, B, C, D, I };
  auto poset = FinitePoset::from_covers(names, {{Z, A}, {Z, B}, {A, C}, {B, C}, {B, D}, {C, I}, {D, I}});
  auto heyting = heyting_implication(build_lattice(std::move(poset)));
  std::array<OpTable, 4> ops{
      OpTable{D, D, D, B, D, Z},  // g
      OpTable{I, I, C, C, Z, Z},  // h
      OpTable{I, A, C, A, A, A},  // f
      OpTable{I, I, B, B, Z, Z},  // p
  };
  return TenseHAlgebra(std::move(heyting), std::move(ops));
}

TenseHAlgebra product(const TenseHAlgebra& left, const TenseHAlgebra& right) {
  const std::size_t nl = left.size(), nr = right.size();
  const std::size_t n = nl * nr;
  auto id = [nr](Elem x, Elem y) { return static_cast<Elem>(x * nr + y); };

  std::vector<std::string> names(n);
  std::vector<ElementSet> up(n, ElementSet(n));
  std::vector<Elem> meet(n * n), join(n * n), imp(n * n);
  std::array<OpTable, 4> ops;
  for (auto& t : ops) t.assign(n, 0);

  for (Elem x = 0; x < nl; ++x) {
    for (Elem y = 0; y < nr; ++y) {
      const Elem e = id(x, y);
      names[e] = "(" + left.name(x) + "," + right.name(y) + ")";
      for (Elem x2 : members(left.poset().up(x))) {
        for (Elem y2 : members(right.poset().up(y))) up[e].set(id(x2, y2));
      }
      for (std::size_t i = 0; i < 4; ++i) {
        ops[i][e] = id(left.apply(kTenseOps[i], x), right.apply(kTenseOps[i], y));
      }
      for (Elem x2 = 0; x2 < nl; ++x2) {
        for (Elem y2 = 0; y2 < nr; ++y2) {
          const Elem e2 = id(x2, y2);
          meet[e * n + e2] = id(left.meet(x, x2), right.meet(y, y2));
          join[e * n + e2] = id(left.join(x, x2), right.join(y, y2));
          imp[e * n + e2] = id(left.imp(x, x2), right.imp(y, y2));
        }
      }
    }
  }
  auto poset = FinitePoset::from_up_rows(std::move(names), std::move(up), /*validate=*/false);
  FiniteLattice lattice(std::move(poset), std::move(meet), std::move(join), id(left.bot(), right.bot()),
                        id(left.top(), right.top()));
  return TenseHAlgebra(HeytingAlgebra(std::move(lattice), std::move(imp)), std::move(ops));
}

}  // namespace tensaheyt
