#include "tensaheyt/space.hpp"

#include <algorithm>
#include <functional>

#include "tensaheyt/errors.hpp"

namespace tensaheyt {

Relation TenseHSpace::order() const {
  Relation le(size());
  for (Elem x = 0; x < size(); ++x) {
    for (Elem y : members(poset.up(x))) le.set(x, y);
  }
  return le;
}

std::vector<ElementSet> enumerate_upsets(const FinitePoset& poset, std::size_t limit) {
  const std::size_t n = poset.size();
  // Decide points from the top of a linear extension down: x may join U
  // only when everything strictly above it already has.
  std::vector<Elem> order(n);
  for (Elem x = 0; x < n; ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](Elem a, Elem b) { return poset.rank(a) > poset.rank(b); });

  std::vector<ElementSet> out;
  ElementSet current(n);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) {
      if (out.size() == limit) throw CarrierTooLarge("more than " + std::to_string(limit) + " upsets");
      out.push_back(current);
      return;
    }
    const Elem x = order[i];
    extend(i + 1);
    ElementSet strictly_above = poset.up(x);
    strictly_above.reset(x);
    if (strictly_above.is_subset_of(current)) {
      current.set(x);
      extend(i + 1);
      current.reset(x);
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(), NumericLess{});
  return out;
}

Report check_space_axioms(const TenseHSpace& x, const Limits& limits) {
  Report report;
  const auto& poset = x.poset;

  Finding s2{"S2", true, {}};
  for (Elem p = 0; p < x.size(); ++p) {
    const ElementSet& succ = x.r.row(p);
    if ((poset.down_closure(succ) & poset.up_closure(succ)) != succ) {
      s2.pass = false;
      s2.witness = {{"x", x.name(p)}};
      break;
    }
  }
  report.add(std::move(s2));

  Finding s3{"S3", true, {}};
  const Relation conv = x.r.converse();
  for (const auto& u : enumerate_upsets(poset, limits.max_elements)) {
    const std::pair<const char*, ElementSet> images[] = {
        {"g", frame_g(x.r, u)}, {"h", frame_h(conv, u)}, {"f", frame_f(x.r, u)}, {"p", frame_p(conv, u)}};
    for (const auto& [op, image] : images) {
      if (!poset.is_upset(image)) {
        s3.pass = false;
        s3.witness = {{"op", op}, {"U", format_set(u, x.names())}};
        break;
      }
    }
    if (!s3.pass) break;
  }
  report.add(std::move(s3));
  return report;
}

}  // namespace tensaheyt
