#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tensaheyt/congruence.hpp"
#include "tensaheyt/constructions.hpp"
#include "tensaheyt/corpus.hpp"
#include "tensaheyt/duality.hpp"
#include "tensaheyt/errors.hpp"
#include "tensaheyt/heyting.hpp"
#include "tensaheyt/spectral_checks.hpp"
#include "tensaheyt/text_format.hpp"

using namespace tensaheyt;

namespace {

TenseHSpace space(std::vector<std::pair<Elem, Elem>> covers, std::vector<std::pair<Elem, Elem>> rel, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return {FinitePoset::from_covers(names, covers), Relation::from_pairs(n, rel)};
}

SpaceMorphism identity_on(std::size_t n) {
  SpaceMorphism k{std::vector<Elem>(n)};
  for (Elem i = 0; i < n; ++i) k.map[i] = i;
  return k;
}

}  // namespace

TEST_SUITE("duality") {

TEST_CASE("spectrum of ej2") {
  const auto a = build_ej2();
  const auto x = dual_space(a);
  CHECK(x.space.names() == std::vector<std::string>{"^a", "^b", "^d"});
  CHECK(write_space(x.space) == "points: ^a ^b ^d\nleq: ^d<^b\nrel R: ^b->^a ^b->^d ^d->^a ^d->^b\n");
  CHECK(spectral_relation_fg(a, x.primes) == spectral_relation_ph(a, x.primes));
  CHECK(check_space_axioms(x.space).all_pass());
  CHECK(dual_algebra(x.space).algebra.size() == 6);
}

TEST_CASE("upsets match the subset scan") {
  for (const auto& [name, a] : standard_corpus()) {
    if (a.size() > 8) continue;
    CAPTURE(name);
    std::vector<ElementSet> want;
    for (const auto& s : oracle::all_subsets(a.size())) {
      if (a.poset().is_upset(s)) want.push_back(s);
    }
    CHECK(enumerate_upsets(a.poset()) == want);
  }
  CHECK_THROWS_AS(enumerate_upsets(build_ej2().poset(), 3), CarrierTooLarge);
}

TEST_CASE("space axiom violations") {
  // R(x0) = {x0, x2} skips x1 on the chain x0 < x1 < x2
  const auto not_convex = space({{0, 1}, {1, 2}}, {{0, 0}, {0, 2}}, 3);
  const auto r2 = check_space_axioms(not_convex);
  CHECK(r2.find("S2")->to_line() == "S2 FAIL x=x0");
  CHECK_THROWS_AS(dual_algebra(not_convex), SpaceAxiomViolation);

  // g_R({x1}) = {x0} is not an upset
  const auto not_closed = space({{0, 1}}, {{0, 0}}, 2);
  const auto r3 = check_space_axioms(not_closed);
  CHECK(r3.find("S2")->pass);
  CHECK_FALSE(r3.find("S3")->pass);
  CHECK_THROWS_AS(dual_algebra(not_closed), SpaceAxiomViolation);
}

TEST_CASE("sigma on the corpus") {
  for (const auto& [name, a] : standard_corpus()) {
    if (a.size() > 8) continue;
    CAPTURE(name);
    const auto rt = sigma(a);
    CHECK(rt.verification.all_pass());
    CHECK(rt.algebra.algebra.size() == a.size());
  }
}

TEST_CASE("epsilon on every valid space over two points") {
  std::size_t valid = 0;
  for (const bool chain : {true, false}) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<std::pair<Elem, Elem>> rel;
      for (Elem b = 0; b < 4; ++b) {
        if (mask >> b & 1) rel.emplace_back(b / 2, b % 2);
      }
      const auto x = chain ? space({{0, 1}}, rel, 2) : space({}, rel, 2);
      CAPTURE(mask);
      if (!check_space_axioms(x).all_pass()) {
        CHECK(chain);
        CHECK_THROWS_AS(epsilon(x), SpaceAxiomViolation);
        continue;
      }
      ++valid;
      const auto rt = epsilon(x);
      CHECK(rt.verification.all_pass());
      CHECK(rt.spectrum.space.size() == 2);
      CHECK(check_morphism_equivalence(x, rt.spectrum.space, rt.epsilon).holds());
    }
  }
  // every relation on the antichain, and some on the chain
  CHECK(valid > 16);
}

TEST_CASE("dual morphisms are functorial") {
  const auto two = build_extreme(chain_algebra(2));
  const auto prod = build_boolean_product();
  const auto x_two = dual_space(two);
  const auto x_prod = dual_space(prod);
  const AlgebraMorphism diag{{0, 3}};
  AlgebraMorphism pi{std::vector<Elem>(4)};
  for (Elem x = 0; x < 4; ++x) pi.map[x] = x / 2;
  REQUIRE(check_homomorphism(two, prod, diag).all_pass());
  REQUIRE(check_homomorphism(prod, two, pi).all_pass());

  const auto d_diag = dual_morphism(two, x_two, prod, x_prod, diag);
  const auto d_pi = dual_morphism(prod, x_prod, two, x_two, pi);
  const auto d_composite = dual_morphism(two, x_two, two, x_two, compose(diag, pi));
  CHECK(d_composite == compose(d_pi, d_diag));
  CHECK(d_composite == identity_on(x_two.space.size()));
  for (const auto* k : {&d_diag, &d_pi}) {
    const bool into_prod = k == &d_pi;
    const auto& from = into_prod ? x_two.space : x_prod.space;
    const auto& to = into_prod ? x_prod.space : x_two.space;
    CHECK(check_morphism_equivalence(from, to, *k).holds());
    CHECK(check_heyting_morphism(from, to, *k).all_pass());
  }

  const AlgebraMorphism constant{{0, 0, 0, 0}};
  CHECK_FALSE(check_homomorphism(prod, two, constant).all_pass());
  CHECK_THROWS_AS(dual_morphism(prod, x_prod, two, x_two, constant), NotAHomomorphism);
}

TEST_CASE("quotient projections dualize to embeddings") {
  const auto prod = build_boolean_product();
  const auto x_prod = dual_space(prod);
  for (const auto& theta : congruence_lattice(prod).congruences) {
    if (theta == Congruence::total(4) || theta == Congruence::identity(4)) continue;
    const auto q = quotient(prod, theta);
    const auto x_q = dual_space(q.algebra);
    const auto k = dual_morphism(prod, x_prod, q.algebra, x_q, AlgebraMorphism{q.projection});
    CHECK(check_morphism_equivalence(x_q.space, x_prod.space, k).holds());
    CHECK(check_heyting_morphism(x_q.space, x_prod.space, k).all_pass());
    std::vector<Elem> image = k.map;
    std::sort(image.begin(), image.end());
    CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
  }
}

TEST_CASE("morphism conditions on maps of the ej2 spectrum") {
  const auto x = dual_space(build_ej2()).space;
  const auto swap_ab = check_morphism_equivalence(x, x, SpaceMorphism{{1, 0, 2}});
  CHECK(swap_ab.pointwise.find("m2")->to_line() == "m2 FAIL x=^a y=^a");
  CHECK_FALSE(swap_ab.upsets.all_pass());
  // ^b <-> ^d respects R and the tense conditions but not the order
  const SpaceMorphism swap_bd{{0, 2, 1}};
  const auto eq = check_morphism_equivalence(x, x, swap_bd);
  CHECK(eq.pointwise.all_pass());
  CHECK(eq.upsets.all_pass());
  CHECK_FALSE(check_heyting_morphism(x, x, swap_bd).all_pass());
  for (Elem c = 0; c < 3; ++c) {
    CHECK_FALSE(check_morphism_equivalence(x, x, SpaceMorphism{{c, c, c}}).holds());
  }
}

TEST_CASE("spectral checks and separation on the corpus") {
  for (const auto& [name, a] : standard_corpus()) {
    if (a.size() > 8) continue;
    CAPTURE(name);
    const auto x = dual_space(a);
    CHECK(check_spectral_relation(a, x).all_pass());
    CHECK(check_spectral_membership(a, x).all_pass());
    CHECK(check_composite_forms(a, x).all_pass());
    const auto sep = check_separation(x.space);
    CHECK(sep.report.all_pass());
    const std::size_t n = x.space.size();
    CHECK(sep.witnesses.size() == n * n - x.space.r.pairs().size());
    for (const auto& w : sep.witnesses) {
      CHECK_FALSE(x.space.r.test(w.x, w.y));
      if (w.kind == 'f') {
        CHECK(frame_f(x.space.r, w.upset).test(w.x));
        CHECK(w.upset.test(w.y));
      } else {
        CHECK_FALSE(w.upset.test(w.y));
        CHECK_FALSE(frame_g(x.space.r, w.upset).test(w.x));
      }
    }
  }
}

}
