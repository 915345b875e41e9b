#include <doctest.h>

#include "oracles.hpp"
#include "tensaheyt/axioms.hpp"
#include "tensaheyt/constructions.hpp"
#include "tensaheyt/corpus.hpp"
#include "tensaheyt/errors.hpp"
#include "tensaheyt/heyting.hpp"

using namespace tensaheyt;

TEST_SUITE("tense") {

TEST_CASE("ej2 operator table") {
  const auto a = build_ej2();
  auto row = [&](TenseOp op) {
    std::string s;
    for (Elem x = 0; x < a.size(); ++x) s += a.name(a.apply(op, x)) + " ";
    return s;
  };
  CHECK(row(TenseOp::g) == "d d d b d 0 ");
  CHECK(row(TenseOp::h) == "1 1 c c 0 0 ");
  CHECK(row(TenseOp::f) == "1 a c a a a ");
  CHECK(row(TenseOp::p) == "1 1 b b 0 0 ");
}

TEST_CASE("every corpus algebra satisfies T1-T14") {
  const auto corpus = standard_corpus();
  CHECK(corpus.size() == 5 + 2 + 2 + 16 + 512);
  CHECK(corpus[5].name == "ej2");
  CHECK(corpus[6].name == "product");
  for (const auto& [name, a] : corpus) {
    CAPTURE(name);
    auto r = check_axioms(a);
    r.append(check_derived_laws(a));
    REQUIRE(r.findings.size() == 14);
    CHECK(r.all_pass());
    CHECK(check_prime_preimages(a).all_pass());
  }
}

TEST_CASE("violations name the first witness") {
  // extreme:2 with h flattened to 0
  const TenseHAlgebra bad(chain_algebra(2), {OpTable{1, 0}, OpTable{0, 0}, OpTable{1, 0}, OpTable{1, 0}});
  const auto r = check_axioms(bad);
  CHECK(r.find("T1")->pass);
  CHECK(r.find("T3")->pass);
  CHECK(r.find("T5")->to_line() == "T5 FAIL x=0");
  CHECK(check_derived_laws(bad).find("T11")->to_line() == "T11 FAIL x=0 y=0");
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(build_extreme(chain_algebra(1)), DegenerateAlgebra);
  CHECK_THROWS_AS(build_frame_algebra(0, Relation(0)), DegenerateAlgebra);
  Limits tight;
  tight.max_elements = 8;
  CHECK_NOTHROW(build_frame_algebra(3, Relation(3), tight));
  CHECK_THROWS_AS(build_frame_algebra(4, Relation(4), tight), CarrierTooLarge);
  CHECK_THROWS_AS(TenseHAlgebra(chain_algebra(2), {OpTable{1, 0}, OpTable{1}, OpTable{1, 0}, OpTable{1, 0}}),
                  FormatError);
  CHECK_THROWS_AS(TenseHAlgebra(chain_algebra(2), {OpTable{1, 0}, OpTable{1, 7}, OpTable{1, 0}, OpTable{1, 0}}),
                  FormatError);
}

TEST_CASE("frame algebra operators are the relational ones") {
  const auto r = Relation::from_pairs(2, {{0, 1}});
  const auto a = build_frame_algebra(2, r);
  REQUIRE(a.size() == 4);
  for (Elem u = 0; u < 4; ++u) {
    const ElementSet s(2, u);
    CHECK(a.g(u) == frame_g(r, s).to_ulong());
    CHECK(a.f(u) == frame_f(r, s).to_ulong());
    CHECK(a.h(u) == frame_h(r.converse(), s).to_ulong());
    CHECK(a.p(u) == frame_p(r.converse(), s).to_ulong());
  }
}

TEST_CASE("example specs") {
  CHECK(build_from_spec("ej2").algebra.size() == 6);
  CHECK(build_from_spec("product").algebra.size() == 4);
  CHECK(build_from_spec("extreme:5").algebra.size() == 5);
  const auto fr = build_from_spec("frame:2:0-1,1-1");
  CHECK(fr.algebra.size() == 4);
  CHECK(fr.name == "frame:2:0-1,1-1");
  CHECK(build_from_spec("frame:1:").algebra.size() == 2);
  CHECK(frame_spec(2, Relation::from_pairs(2, {{1, 1}, {0, 1}})) == "frame:2:0-1,1-1");
  for (const char* bad : {"ej3", "extreme:x", "frame:2:0-5", "frame:2:01", "extreme:"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(build_from_spec(bad), FormatError);
  }
  CHECK_THROWS_AS(build_from_spec("extreme:1"), DegenerateAlgebra);
}

TEST_CASE("frame enumeration stops on request") {
  std::size_t seen = 0;
  CHECK_FALSE(for_each_frame(3, [&](const NamedAlgebra&) { return ++seen < 7; }));
  CHECK(seen == 7);
  CHECK(frame_corpus(2).size() == 2 + 16);
}

}
