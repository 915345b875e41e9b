#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tensaheyt/constructions.hpp"
#include "tensaheyt/errors.hpp"
#include "tensaheyt/filter.hpp"
#include "tensaheyt/heyting.hpp"
#include "tensaheyt/relation.hpp"

using namespace tensaheyt;

namespace {

FinitePoset named(std::vector<std::string> names, std::vector<std::pair<Elem, Elem>> covers) {
  return FinitePoset::from_covers(std::move(names), covers);
}

std::vector<ElementSet> sorted(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end(), NumericLess{});
  return v;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("poset closure and covers") {
  const auto p = named({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(p.leq(0, 3));
  CHECK_FALSE(p.leq(1, 2));
  CHECK(p.covers().size() == 4);
  CHECK(p.up_closure(make_set(4, {1})) == make_set(4, {1, 3}));
  CHECK(p.down_closure(make_set(4, {1})) == make_set(4, {0, 1}));
  CHECK(p.is_upset(make_set(4, {1, 2, 3})));
  CHECK_FALSE(p.is_upset(make_set(4, {0})));
  CHECK(p.maximum(make_set(4, {0, 1})) == Elem{1});
  CHECK_FALSE(p.maximum(make_set(4, {1, 2})).has_value());
  CHECK(*p.find("b") == 2);
}

TEST_CASE("cycles and bad rows are rejected") {
  CHECK_THROWS_AS(named({"x", "y"}, {{0, 1}, {1, 0}}), NotAPartialOrder);
  CHECK_THROWS_AS(named({"x", "y"}, {{0, 5}}), NotAPartialOrder);
  // missing transitivity
  CHECK_THROWS_AS(FinitePoset::from_up_rows({"x", "y", "z"}, {make_set(3, {0, 1}), make_set(3, {1, 2}), make_set(3, {2})}),
                  NotAPartialOrder);
}

TEST_CASE("lattice tables follow the order") {
  const auto l = build_lattice(named({"0", "a", "b", "c", "d", "1"},
                                     {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}));
  CHECK(l.bot() == 0);
  CHECK(l.top() == 5);
  CHECK(l.meet(3, 4) == 2);
  CHECK(l.join(1, 2) == 3);
  CHECK(l.join(1, 4) == 5);
  CHECK(l.meet_all(ElementSet(6)) == l.top());
  CHECK(l.join_all(ElementSet(6)) == l.bot());
  CHECK_THROWS_AS(build_lattice(named({"a", "b"}, {})), NotALattice);
  CHECK_THROWS_AS(build_lattice(named({"0", "a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}})),
                  NotALattice);
}

TEST_CASE("M3 and N5 are not distributive") {
  const auto m3 = build_lattice(named({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
  const auto n5 = build_lattice(named({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}));
  CHECK(distributivity_witness(m3).has_value());
  CHECK(distributivity_witness(n5).has_value());
  CHECK_THROWS_AS(heyting_implication(m3), NotDistributive);
  CHECK_THROWS_AS(heyting_implication(n5), NotDistributive);
}

TEST_CASE("implication is the residual on every corpus lattice") {
  for (const auto& [name, a] : standard_corpus()) {
    if (a.size() > 16) continue;
    CAPTURE(name);
    const oracle::OrderTables t(a);
    for (Elem x = 0; x < a.size(); ++x) {
      for (Elem y = 0; y < a.size(); ++y) {
        REQUIRE(a.meet(x, y) == t.meet[x * a.size() + y]);
        REQUIRE(a.join(x, y) == t.join[x * a.size() + y]);
        REQUIRE(a.imp(x, y) == t.imp[x * a.size() + y]);
        for (Elem c = 0; c < a.size(); ++c) {
          REQUIRE(a.leq(a.meet(x, c), y) == a.leq(c, a.imp(x, y)));
        }
      }
    }
  }
}

TEST_CASE("filters and prime filters match the subset scan") {
  for (const auto& [name, a] : standard_corpus()) {
    if (a.size() > 12) continue;
    CAPTURE(name);
    std::vector<ElementSet> got, primes, want_primes;
    for (const auto& f : enumerate_filters(a.lattice())) got.push_back(f.members);
    for (const auto& f : enumerate_prime_filters(a.lattice())) primes.push_back(f.members);
    for (const auto& s : oracle::filters(a)) {
      if (oracle::is_prime_filter(a, s)) want_primes.push_back(s);
    }
    CHECK(sorted(got) == sorted(oracle::filters(a)));
    CHECK(sorted(primes) == sorted(want_primes));
    // on a finite distributive lattice the primes are the up-sets of join-irreducibles
    std::vector<ElementSet> by_ji;
    for (Elem x = 0; x < a.size(); ++x) {
      if (a.lattice().is_join_irreducible(x)) by_ji.push_back(a.poset().up(x));
    }
    CHECK(sorted(by_ji) == sorted(primes));
  }
}

TEST_CASE("filter and ideal separation") {
  const auto a = build_ej2();
  const auto& l = a.lattice();
  const Elem d = *a.poset().find("d"), b = *a.poset().find("b"), x = *a.poset().find("a");
  const auto p = filter_ideal_separation(l, principal_filter(l, d), principal_ideal(l, x));
  CHECK(is_prime_filter(l, p.members));
  CHECK(p.members.test(d));
  CHECK_FALSE(p.members.test(x));
  CHECK(generator(l, p) == b);
  CHECK_THROWS_AS(filter_ideal_separation(l, principal_filter(l, x), principal_ideal(l, a.top())), NotDisjoint);
  CHECK_THROWS_AS(filter_ideal_separation(l, Filter{make_set(6, {x})}, principal_ideal(l, a.bot())), NotAFilter);

  // every disjoint filter/ideal pair separates
  for (Elem f = 0; f < a.size(); ++f) {
    for (Elem i = 0; i < a.size(); ++i) {
      if (a.leq(f, i)) continue;
      const auto q = filter_ideal_separation(l, principal_filter(l, f), principal_ideal(l, i));
      CHECK(q.members.test(f));
      CHECK_FALSE(q.members.test(i));
    }
  }
}

TEST_CASE("powerset and chain algebras") {
  const auto ps = powerset_algebra({"p", "q"});
  REQUIRE(ps.size() == 4);
  CHECK(ps.name(0) == "{}");
  CHECK(ps.name(3) == "{p,q}");
  CHECK(ps.neg(1) == 2);
  const auto c = chain_algebra(4);
  CHECK(c.names() == std::vector<std::string>{"0", "m1", "m2", "1"});
  CHECK(c.imp(2, 1) == 1);
  CHECK(c.imp(1, 2) == c.top());
  CHECK(c.neg(1) == c.bot());
}

TEST_CASE("relation composition and frame operators") {
  const auto r = Relation::from_pairs(3, {{0, 1}, {1, 2}});
  CHECK(r.compose(r).pairs() == std::vector<std::pair<Elem, Elem>>{{0, 2}});
  CHECK(r.converse().test(1, 0));
  const auto u = make_set(3, {2});
  CHECK(frame_g(r, u) == make_set(3, {0}));
  CHECK(frame_f(r, u) == make_set(3, {0, 2}));
  CHECK(frame_h(r.converse(), u) == make_set(3, {1, 2}));
  CHECK(frame_p(r.converse(), u) == make_set(3, {0, 1, 2}));
}

}
