#include "tensaheyt/lattice.hpp"

#include "tensaheyt/errors.hpp"

namespace tensaheyt {

FiniteLattice::FiniteLattice(FinitePoset poset, std::vector<Elem> meet, std::vector<Elem> join, Elem bot,
                             Elem top)
    : poset_(std::move(poset)), meet_(std::move(meet)), join_(std::move(join)), bot_(bot), top_(top) {}

Elem FiniteLattice::meet_all(const ElementSet& s) const {
  Elem acc = top_;
  for (Elem x : members(s)) acc = meet(acc, x);
  return acc;
}

Elem FiniteLattice::join_all(const ElementSet& s) const {
  Elem acc = bot_;
  for (Elem x : members(s)) acc = join(acc, x);
  return acc;
}

bool FiniteLattice::is_join_irreducible(Elem x) const {
  if (x == bot_) return false;
  const std::size_t n = size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (join(a, b) == x && a != x && b != x) return false;
    }
  }
  return true;
}

FiniteLattice build_lattice(FinitePoset poset) {
  const std::size_t n = poset.size();
  if (n == 0) throw NotALattice("empty carrier has no bounds");

  const auto everything = full_set(n);
  const auto bot = poset.minimum(everything);
  const auto top = poset.maximum(everything);
  if (!bot) throw NotALattice("no least element");
  if (!top) throw NotALattice("no greatest element");

  std::vector<Elem> meet(n * n);
  std::vector<Elem> join(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      const auto glb = poset.maximum(poset.down(a) & poset.down(b));
      if (!glb) throw NotALattice("no greatest lower bound for " + poset.name(a) + ", " + poset.name(b));
      const auto lub = poset.minimum(poset.up(a) & poset.up(b));
      if (!lub) throw NotALattice("no least upper bound for " + poset.name(a) + ", " + poset.name(b));
      meet[a * n + b] = meet[b * n + a] = *glb;
      join[a * n + b] = join[b * n + a] = *lub;
    }
  }
  return FiniteLattice(std::move(poset), std::move(meet), std::move(join), *bot, *top);
}

}  // namespace tensaheyt
