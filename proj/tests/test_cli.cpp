#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tensaheyt/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tensaheyt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const char* name) { return (std::filesystem::path(TENSAHEYT_GOLDEN_DIR) / name).string(); }

std::string temp(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
  const auto alg = golden("ej2.alg");
  CHECK(run({"check", alg}).code == 0);
  CHECK(run({"valid", alg, "g x1 & f x2 -> g (x1 | x2)"}).out == "valid PASS\n");
  CHECK(run({"valid", alg, "f x1 -> ~ g ~ x1"}).code == 1);
  CHECK(run({"simple", alg}).code == 0);
  CHECK(run({"check", temp("does-not-exist.alg")}).code == 2);
  CHECK(run({"valid", alg, "x1 $"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const auto bad = run({"valid", alg, "x1 &"});
  CHECK(bad.err == "error: expected a formula but found end of input at offset 4\n");
}

TEST_CASE("product is not simple") {
  const auto path = temp("tensaheyt_cli_product.alg");
  REQUIRE(run({"gen-example", "product", "-o", path}).code == 0);
  const auto r = run({"simple", path});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("simple FAIL a=", 0) == 0);
  CHECK(r.out.find("subdirectly-irreducible FAIL") != std::string::npos);
}

TEST_CASE("queries") {
  const auto alg = golden("ej2.alg");
  CHECK(run({"eval", alg, "~ g ~ x1", "--assign", "x1=b"}).out == "value a\n");
  CHECK(run({"eval", alg, "f x1", "--assign", "x1=b"}).out == "value c\n");
  CHECK(run({"generate", alg, "--from", "c"}).out == "generator 0\nfilter A\n");
  const auto l = run({"lddt", alg, "--delta", "b", "--psi", "0"});
  CHECK(l.code == 0);
  CHECK(l.out.find("rhs true k=1 delta={b}") != std::string::npos);
  const auto cm = run({"countermodel", "f x1 -> ~ g ~ x1", "--corpus"});
  CHECK(cm.code == 1);
  CHECK(cm.out.rfind("valid FAIL algebra=ej2 x1=b", 0) == 0);
  CHECK(run({"countermodel", "top", "--frames", "2"}).code == 0);
}

TEST_CASE("dualize and morphisms") {
  const auto alg = golden("ej2.alg");
  const auto space = temp("tensaheyt_cli_ej2.space");
  const auto d = run({"dualize", alg, "-o", space});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("points 3\n", 0) == 0);
  CHECK(run({"roundtrip", space}).code == 0);

  const auto map = temp("tensaheyt_cli_id.map");
  std::ofstream(map) << "0->0 a->a b->b c->c d->d 1->1\n";
  const auto m = run({"morphism", alg, alg, map, "--check"});
  CHECK(m.code == 0);
  CHECK(m.out.find("M5 PASS") != std::string::npos);
  std::ofstream(map) << "0->0 a->0 b->0 c->0 d->0 1->1\n";
  CHECK(run({"morphism", alg, alg, map}).code == 1);
}

TEST_CASE("output is deterministic") {
  const auto alg = golden("ej2.alg");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check", alg}, {"congruences", alg}, {"filters", alg}, {"roundtrip", alg}, {"--json", "check", alg}}) {
    const auto first = run(args);
    for (int i = 0; i < 3; ++i) CHECK(run(args).out == first.out);
  }
}

TEST_CASE("json output") {
  const auto alg = golden("ej2.alg");
  const auto r = run({"--json", "valid", alg, "f x1 -> ~ g ~ x1"});
  CHECK(r.code == 1);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.is_object());
  CHECK(doc.dump().find("x1") != std::string::npos);
  CHECK(nlohmann::json::parse(run({"--json", "check", alg}).out).is_object());
}

}
