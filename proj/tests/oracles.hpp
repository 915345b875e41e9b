#pragma once

// Brute-force reference implementations used by the tests. They work from
// the order relation and the operator tables only, never from the library
// algorithm under test.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tensaheyt/formula.hpp"
#include "tensaheyt/semantics.hpp"
#include "tensaheyt/tense_algebra.hpp"

namespace oracle {

using tensaheyt::Elem;
using tensaheyt::ElementSet;
using tensaheyt::TenseHAlgebra;
using tensaheyt::TenseOp;

inline std::vector<ElementSet> all_subsets(std::size_t n) {
  std::vector<ElementSet> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) out.emplace_back(n, mask);
  return out;
}

// Greatest lower bound found by scanning the order.
inline Elem glb(const TenseHAlgebra& a, Elem x, Elem y) {
  std::optional<Elem> best;
  for (Elem z = 0; z < a.size(); ++z) {
    if (a.leq(z, x) && a.leq(z, y) && (!best || a.leq(*best, z))) best = z;
  }
  return *best;
}

inline Elem lub(const TenseHAlgebra& a, Elem x, Elem y) {
  std::optional<Elem> best;
  for (Elem z = 0; z < a.size(); ++z) {
    if (a.leq(x, z) && a.leq(y, z) && (!best || a.leq(z, *best))) best = z;
  }
  return *best;
}

// Largest c with x & c <= y, from the order alone.
inline Elem residual(const TenseHAlgebra& a, Elem x, Elem y) {
  std::optional<Elem> best;
  for (Elem c = 0; c < a.size(); ++c) {
    if (a.leq(glb(a, x, c), y) && (!best || a.leq(*best, c))) best = c;
  }
  return *best;
}

inline Elem neg(const TenseHAlgebra& a, Elem x) { return residual(a, x, a.bot()); }

inline Elem meet_of(const TenseHAlgebra& a, const ElementSet& s) {
  Elem m = a.top();
  for (Elem x = 0; x < a.size(); ++x) {
    if (s.test(x)) m = glb(a, m, x);
  }
  return m;
}

// Meet, join and residual tables derived from the order alone.
struct OrderTables {
  std::size_t n;
  std::vector<Elem> meet, join, imp;

  explicit OrderTables(const TenseHAlgebra& a) : n(a.size()), meet(n * n), join(n * n), imp(n * n) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        meet[x * n + y] = glb(a, x, y);
        join[x * n + y] = lub(a, x, y);
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        std::optional<Elem> best;
        for (Elem c = 0; c < n; ++c) {
          if (a.leq(meet[x * n + c], y) && (!best || a.leq(*best, c))) best = c;
        }
        imp[x * n + y] = *best;
      }
    }
  }
};

inline bool is_filter(const TenseHAlgebra& a, const ElementSet& s) {
  if (s.none()) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    if (!s.test(x)) continue;
    for (Elem y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) && !s.test(y)) return false;
      if (s.test(y) && !s.test(glb(a, x, y))) return false;
    }
  }
  return true;
}

inline bool is_prime_filter(const TenseHAlgebra& a, const ElementSet& s) {
  if (!is_filter(a, s) || s.test(a.bot())) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (s.test(lub(a, x, y)) && !s.test(x) && !s.test(y)) return false;
    }
  }
  return true;
}

inline std::vector<ElementSet> filters(const TenseHAlgebra& a) {
  std::vector<ElementSet> out;
  for (const auto& s : all_subsets(a.size())) {
    if (is_filter(a, s)) out.push_back(s);
  }
  return out;
}

// Filter closed under x -> y in F implies u(y) -> u(x) in F.
inline bool is_tense_filter(const TenseHAlgebra& a, const OrderTables& t, const ElementSet& s) {
  if (!is_filter(a, s)) return false;
  const std::size_t n = a.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!s.test(t.imp[x * n + y])) continue;
      for (TenseOp u : tensaheyt::kTenseOps) {
        if (!s.test(t.imp[a.apply(u, y) * n + a.apply(u, x)])) return false;
      }
    }
  }
  return true;
}

inline bool is_tense_filter(const TenseHAlgebra& a, const ElementSet& s) {
  return is_tense_filter(a, OrderTables(a), s);
}

inline std::vector<ElementSet> tense_filters(const TenseHAlgebra& a) {
  const OrderTables t(a);
  std::vector<ElementSet> out;
  for (const auto& s : filters(a)) {
    if (is_tense_filter(a, t, s)) out.push_back(s);
  }
  return out;
}

// Intersection of every tense filter containing x.
inline ElementSet generated_by_intersection(const TenseHAlgebra& a, const std::vector<ElementSet>& tense,
                                            const ElementSet& x) {
  ElementSet out(a.size());
  out.set();
  for (const auto& f : tense) {
    if (x.is_subset_of(f)) out &= f;
  }
  return out;
}

// [N](x) straight from its definition: the meet over u and b of
// u(x & b) -> u(b), computed through the order.
inline Elem box_n(const TenseHAlgebra& a, Elem x) {
  Elem m = a.top();
  for (TenseOp u : tensaheyt::kTenseOps) {
    for (Elem b = 0; b < a.size(); ++b) {
      m = glb(a, m, residual(a, a.apply(u, glb(a, x, b)), a.apply(u, b)));
    }
  }
  return m;
}

// Every partition (as a class label per element) compatible with all
// operations, by restricted growth strings.
inline std::vector<std::vector<Elem>> congruences(const TenseHAlgebra& a) {
  const std::size_t n = a.size();
  const OrderTables t(a);
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> label(n, 0);
  auto compatible = [&] {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x + 1; y < n; ++y) {
        if (label[x] != label[y]) continue;
        for (TenseOp u : tensaheyt::kTenseOps) {
          if (label[a.apply(u, x)] != label[a.apply(u, y)]) return false;
        }
        for (Elem z = 0; z < n; ++z) {
          if (label[t.meet[x * n + z]] != label[t.meet[y * n + z]]) return false;
          if (label[t.join[x * n + z]] != label[t.join[y * n + z]]) return false;
          if (label[t.imp[x * n + z]] != label[t.imp[y * n + z]]) return false;
          if (label[t.imp[z * n + x]] != label[t.imp[z * n + y]]) return false;
        }
      }
    }
    return true;
  };
  std::function<void(std::size_t, Elem)> grow = [&](std::size_t i, Elem used) {
    if (i == n) {
      if (compatible()) out.push_back(label);
      return;
    }
    for (Elem c = 0; c <= used && c < n; ++c) {
      label[i] = c;
      grow(i + 1, std::max<Elem>(used, c + 1));
    }
  };
  grow(1, 1);
  return out;
}

inline bool refines(const std::vector<Elem>& fine, const std::vector<Elem>& coarse) {
  for (std::size_t x = 0; x < fine.size(); ++x) {
    for (std::size_t y = 0; y < fine.size(); ++y) {
      if (fine[x] == fine[y] && coarse[x] != coarse[y]) return false;
    }
  }
  return true;
}

// Evaluation through the order instead of the binary tables.
inline Elem eval(const tensaheyt::Formula& f, const TenseHAlgebra& a, const tensaheyt::Assignment& m) {
  using K = tensaheyt::Formula::Kind;
  switch (f.kind()) {
    case K::Var: return m.at(f.var_index());
    case K::Bot: return a.bot();
    case K::Top: return a.top();
    case K::And: return glb(a, oracle::eval(f.lhs(), a, m), oracle::eval(f.rhs(), a, m));
    case K::Or: return lub(a, oracle::eval(f.lhs(), a, m), oracle::eval(f.rhs(), a, m));
    case K::Imp: return residual(a, oracle::eval(f.lhs(), a, m), oracle::eval(f.rhs(), a, m));
    default: return a.apply(f.op(), oracle::eval(f.lhs(), a, m));
  }
}

}  // namespace oracle
