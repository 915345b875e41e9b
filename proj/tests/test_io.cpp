#include <doctest.h>

#include <filesystem>

#include "tensaheyt/constructions.hpp"
#include "tensaheyt/corpus.hpp"
#include "tensaheyt/duality.hpp"
#include "tensaheyt/errors.hpp"
#include "tensaheyt/text_format.hpp"

using namespace tensaheyt;

namespace {

const char* kEj2 =
    "# ej2\n"
    "elements: 0 a b c d 1\n"
    "leq: 0<a 0<b a<c b<c b<d c<1 d<1\n"
    "op g: 0->d a->d b->d c->b d->d 1->0\n"
    "op h: 0->1 a->1 b->c c->c d->0 1->0\n"
    "op f: 0->1 a->a b->c c->a d->a 1->a\n"
    "op p: 0->1 a->1 b->b c->b d->0 1->0\n";

std::string replace_line(std::string text, const std::string& prefix, const std::string& line) {
  const auto at = text.find(prefix);
  const auto end = text.find('\n', at);
  return text.replace(at, end - at, line);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("algebra text round trip") {
  const auto a = read_tense_algebra(kEj2);
  const auto b = build_ej2();
  CHECK(a.names() == b.names());
  for (TenseOp u : kTenseOps) CHECK(a.table(u) == b.table(u));
  CHECK(write_algebra(a) == write_algebra(b));
  for (const auto& [name, c] : standard_corpus()) {
    if (c.size() > 8) continue;
    CAPTURE(name);
    const auto text = write_algebra(c);
    const auto back = read_tense_algebra(text);
    CHECK(write_algebra(back) == text);
    CHECK(back.names() == c.names());
  }
}

TEST_CASE("operator lines are optional until conversion") {
  const auto partial = parse_algebra_text("elements: 0 1\nleq: 0<1\nop g: 0->1 1->0\n");
  CHECK(partial.heyting.size() == 2);
  CHECK(partial.ops[0].has_value());
  CHECK_FALSE(partial.ops[1].has_value());
  CHECK_THROWS_WITH_AS(partial.to_tense(), "missing operator 'h'", FormatError);
}

TEST_CASE("malformed algebra text is rejected") {
  const std::string good = kEj2;
  const std::vector<std::pair<std::string, std::string>> bad = {
      {replace_line(good, "elements", "elements: 0 a b c d 1 a"), "line 2: duplicate name 'a'"},
      {replace_line(good, "op g", "op g: 0->d a->d b->d c->b d->d"), "line 4: no entry for '1'"},
      {replace_line(good, "op g", "op g: 0->d a->d b->d c->b d->d 1->0 1->0"), "line 4: duplicate entry for '1'"},
      {replace_line(good, "op g", "op g: 0->d a->d b->d c->b d->d 1->z"), "line 4: unknown name 'z'"},
      {replace_line(good, "op g", "op g: 0->d a->d b->d c->b d->d 1=0"), "line 4: malformed entry '1=0', expected x->y"},
      {replace_line(good, "op g", "op q: 0->d"), "line 4: unknown key 'op q'"},
      {good + "op g: 0->d\n", "line 8: duplicate key 'op g'"},
      {replace_line(good, "elements", "elements: 0 a<b"), "line 2: name 'a<b' may not contain '<' or '->'"},
      {replace_line(good, "elements", "stray words"), "line 2: expected 'key: ...'"},
      {"leq: 0<1\n", "missing 'elements:' line"},
  };
  for (const auto& [text, message] : bad) {
    CAPTURE(text);
    CHECK_THROWS_WITH_AS(read_tense_algebra(text), message.c_str(), FormatError);
  }
  CHECK_THROWS_AS(read_tense_algebra("elements: x y\nleq: x<y y<x\n"), NotAPartialOrder);
  CHECK_THROWS_AS(read_tense_algebra("elements: 0 a b\nleq: 0<a 0<b\n"), NotALattice);
  CHECK_THROWS_AS(parse_algebra_text("elements: 0 a b c 1\nleq: 0<a 0<b 0<c a<1 b<1 c<1\n"), NotDistributive);
}

TEST_CASE("space text round trip") {
  const auto x = dual_space(build_ej2()).space;
  const auto text = write_space(x);
  const auto back = read_space(text);
  CHECK(back.names() == x.names());
  CHECK(back.r == x.r);
  CHECK(back.order() == x.order());
  CHECK(write_space(back) == text);
  CHECK_THROWS_AS(read_space("leq: a<b\n"), FormatError);
  CHECK_THROWS_AS(read_space("points: a b\nrel R: a->c\n"), FormatError);
}

TEST_CASE("map text") {
  const std::vector<std::string> dom = {"0", "1"}, cod = {"0", "a", "1"};
  CHECK(read_map("0->0\n1->1", dom, cod) == std::vector<Elem>{0, 2});
  CHECK(read_map(write_map({0, 1}, dom, cod), dom, cod) == std::vector<Elem>{0, 1});
  CHECK_THROWS_AS(read_map("0->0", dom, cod), FormatError);
  CHECK_THROWS_AS(read_map("0->0 1->b", dom, cod), FormatError);
  CHECK_THROWS_AS(read_map("0->0 1->1 1->0", dom, cod), FormatError);
}

TEST_CASE("files") {
  const auto path = (std::filesystem::temp_directory_path() / "tensaheyt_io_test.alg").string();
  write_file(path, kEj2);
  CHECK(read_file(path) == kEj2);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_file(path), FormatError);
  CHECK_THROWS_AS(write_file("/nonexistent-dir/x.alg", "x"), FormatError);
}

}
