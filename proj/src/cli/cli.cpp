#include "tensaheyt/cli.hpp"

#include <algorithm>
#include <functional>

#include <CLI11.hpp>
#include <json.hpp>

#include "tensaheyt/axioms.hpp"
#include "tensaheyt/congruence.hpp"
#include "tensaheyt/corpus.hpp"
#include "tensaheyt/duality.hpp"
#include "tensaheyt/errors.hpp"
#include "tensaheyt/lddt.hpp"
#include "tensaheyt/parser.hpp"
#include "tensaheyt/semantics.hpp"
#include "tensaheyt/text_format.hpp"

namespace tensaheyt::cli {
namespace {

using json = nlohmann::ordered_json;

// Text and JSON renderings built side by side so both carry the same data.
struct Output {
  std::string text;
  json doc = json::object();
  int code = 0;

  void line(const std::string& s) { text += s + "\n"; }
  void fail() { code = 1; }
};

json finding_json(const Finding& f) {
  json w = json::object();
  for (const auto& [k, v] : f.witness) w[k] = v;
  return json{{"check", f.check}, {"pass", f.pass}, {"witness", w}};
}

void add_finding(Output& o, const Finding& f) {
  o.line(f.to_line());
  o.doc["findings"].push_back(finding_json(f));
  if (!f.pass) o.fail();
}

void add_report(Output& o, const Report& r, const std::string& prefix = "") {
  for (Finding f : r.findings) {
    f.check = prefix + f.check;
    add_finding(o, f);
  }
}

std::string one_line(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  std::string out;
  for (char c : s) {
    if (c == '\n') {
      out += "; ";
    } else {
      out += c;
    }
  }
  return out;
}

std::string set_name(const ElementSet& s, const std::vector<std::string>& names) {
  return s.all() ? "A" : format_set(s, names);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at - start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return out;
}

Elem element(const TenseHAlgebra& a, const std::string& name) {
  const auto id = a.poset().find(name);
  if (!id) throw FormatError("unknown element '" + name + "'");
  return *id;
}

ElementSet element_list(const TenseHAlgebra& a, const std::string& list) {
  ElementSet s(a.size());
  for (const auto& name : split(list, ',')) s.set(element(a, name));
  return s;
}

Assignment parse_assignment(const TenseHAlgebra& a, const std::string& text) {
  Assignment m;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    const std::string var = item.substr(0, eq);
    if (eq == std::string::npos || var.size() < 2 || var[0] != 'x' ||
        var.find_first_not_of("0123456789", 1) != std::string::npos) {
      throw FormatError("bad assignment '" + item + "', expected x<digits>=<element>");
    }
    m[static_cast<unsigned>(std::stoul(var.substr(1)))] = element(a, item.substr(eq + 1));
  }
  return m;
}

TenseHAlgebra load_algebra(const std::string& path) { return read_tense_algebra(read_file(path)); }

bool looks_like_space(const std::string& text) {
  for (const auto& raw : split(text, '\n')) {
    const auto begin = raw.find_first_not_of(" \t");
    if (begin == std::string::npos || raw[begin] == '#') continue;
    return raw.compare(begin, 7, "points:") == 0;
  }
  return false;
}

void report_validity(Output& o, const TenseHAlgebra& a, const Validity& v, const std::string& where = "") {
  Finding f{"valid", v.valid, {}};
  if (!where.empty() && !v.valid) f.witness.emplace_back("algebra", where);
  if (v.countermodel) {
    for (const auto& [var, e] : *v.countermodel) f.witness.emplace_back("x" + std::to_string(var), a.name(e));
    f.witness.emplace_back("value", a.name(v.value));
  }
  add_finding(o, f);
}

// Verbs

Output cmd_check(const std::string& file) {
  const auto a = load_algebra(file);
  Output o;
  Report r = check_axioms(a);
  r.append(check_derived_laws(a));
  add_report(o, r);
  return o;
}

Output cmd_filters(const std::string& file, bool tense) {
  const auto a = load_algebra(file);
  Output o;
  o.doc["filters"] = json::array();
  auto emit = [&](const Filter& f, bool prime) {
    const Elem gen = generator(a.lattice(), f);
    o.line(set_name(f.members, a.names()) + " generator=" + a.name(gen) + (prime ? " prime" : ""));
    json names = json::array();
    for (Elem x : members(f.members)) names.push_back(a.name(x));
    o.doc["filters"].push_back(json{{"generator", a.name(gen)}, {"members", names}, {"prime", prime}});
  };
  std::size_t count = 0;
  if (tense) {
    for (const auto& f : enumerate_tense_filters(a)) {
      emit(f.base, is_prime_filter(a.lattice(), f.members()));
      ++count;
    }
  } else {
    for (const auto& f : enumerate_filters(a.lattice())) {
      emit(f, is_prime_filter(a.lattice(), f.members));
      ++count;
    }
  }
  o.line("count " + std::to_string(count));
  o.doc["count"] = count;
  return o;
}

std::string partition_name(const TenseHAlgebra& a, const Congruence& theta) {
  std::string out;
  for (Elem rep : theta.representatives()) {
    ElementSet cls(a.size());
    for (Elem x = 0; x < a.size(); ++x) {
      if (theta.class_of(x) == rep) cls.set(x);
    }
    out += (out.empty() ? "" : "|") + format_set(cls, a.names());
  }
  return out;
}

Output cmd_congruences(const std::string& file) {
  const auto a = load_algebra(file);
  Output o;
  o.doc["congruences"] = json::array();
  try {
    const auto con = congruence_lattice(a);
    for (std::size_t i = 0; i < con.filters.size(); ++i) {
      const std::string f = set_name(con.filters[i].members(), a.names());
      const std::string theta = partition_name(a, con.congruences[i]);
      o.line("F=" + f + " theta=" + theta);
      o.doc["congruences"].push_back(json{{"filter", f}, {"classes", theta}});
    }
    add_finding(o, Finding{"isomorphism", true, {}});
    o.line("count " + std::to_string(con.filters.size()));
    o.doc["count"] = con.filters.size();
  } catch (const IsomorphismFailure& e) {
    add_finding(o, Finding{"isomorphism", false, {{"error", one_line(e.what())}}});
  }
  return o;
}

Output cmd_simple(const std::string& file) {
  const auto a = load_algebra(file);
  Output o;
  Finding simple{"simple", true, {}};
  if (const auto w = simplicity_witness(a)) {
    simple.pass = false;
    simple.witness = {{"a", a.name(*w)}};
  }
  add_finding(o, simple);
  const bool si = is_subdirectly_irreducible(a);
  o.line(std::string("subdirectly-irreducible ") + (si ? "PASS" : "FAIL"));
  o.doc["subdirectly_irreducible"] = si;
  const auto count = enumerate_tense_filters(a).size();
  o.line("tense-filters " + std::to_string(count));
  o.doc["tense_filters"] = count;
  return o;
}

Output cmd_generate(const std::string& file, const std::string& from) {
  const auto a = load_algebra(file);
  const auto n = box_N(a);
  const ElementSet gens = element_list(a, from);
  const auto f = generated_tense_filter(a, n, gens);
  const Elem gen = generator(a.lattice(), f.base);
  Output o;
  o.line("generator " + a.name(gen));
  o.line("filter " + set_name(f.members(), a.names()));
  o.doc["generator"] = a.name(gen);
  json names = json::array();
  for (Elem x : members(f.members())) names.push_back(a.name(x));
  o.doc["members"] = names;
  return o;
}

Output cmd_dualize(const std::string& file, const std::string& out_file, const Limits& limits) {
  const auto a = load_algebra(file);
  const auto x = dual_space(a);
  const std::string text = write_space(x.space);
  Output o;
  o.doc["space"] = text;
  if (out_file.empty()) {
    o.text = text;
  } else {
    write_file(out_file, text);
    o.line("points " + std::to_string(x.space.size()));
    add_report(o, check_space_axioms(x.space, limits));
  }
  return o;
}

void sigma_lines(Output& o, const TenseHAlgebra& a, const Limits& limits) {
  try {
    const auto rt = sigma(a, limits);
    add_report(o, rt.verification, "sigma-");
    o.line("dual-size " + std::to_string(rt.algebra.algebra.size()));
    o.doc["dual_size"] = rt.algebra.algebra.size();
  } catch (const IsomorphismFailure& e) {
    add_finding(o, Finding{"sigma", false, {{"error", one_line(e.what())}}});
  }
}

void epsilon_lines(Output& o, const TenseHSpace& x, const Limits& limits) {
  try {
    add_report(o, epsilon(x, limits).verification, "epsilon-");
  } catch (const IsomorphismFailure& e) {
    add_finding(o, Finding{"epsilon", false, {{"error", one_line(e.what())}}});
  }
}

Output cmd_roundtrip(const std::string& file, const Limits& limits) {
  const std::string text = read_file(file);
  Output o;
  if (looks_like_space(text)) {
    const auto x = read_space(text);
    epsilon_lines(o, x, limits);
    sigma_lines(o, dual_algebra(x, limits).algebra, limits);
  } else {
    const auto a = read_tense_algebra(text);
    sigma_lines(o, a, limits);
    epsilon_lines(o, dual_space(a).space, limits);
  }
  return o;
}

Output cmd_morphism(const std::string& f1, const std::string& f2, const std::string& map_file, bool check,
                    const Limits& limits) {
  const auto a1 = load_algebra(f1);
  const auto a2 = load_algebra(f2);
  const AlgebraMorphism k{read_map(read_file(map_file), a1.names(), a2.names())};
  Output o;
  const Report hom = check_homomorphism(a1, a2, k);
  if (check) add_report(o, hom, "hom-");
  if (!hom.all_pass()) {
    if (!check) {
      for (const auto& f : hom.findings) {
        if (!f.pass) add_finding(o, Finding{"hom-" + f.check, false, f.witness});
      }
    }
    o.fail();
    return o;
  }
  const auto x1 = dual_space(a1);
  const auto x2 = dual_space(a2);
  const auto dual = dual_morphism(a1, x1, a2, x2, k);
  const std::string map_text = write_map(dual.map, x2.space.names(), x1.space.names());
  o.doc["dual_map"] = map_text;
  if (!check) {
    o.text += map_text;
    return o;
  }
  for (const auto& line : split(map_text, '\n')) {
    if (!line.empty()) o.line("dual " + line);
  }
  add_report(o, check_heyting_morphism(x2.space, x1.space, dual));
  try {
    const auto eq = check_morphism_equivalence(x2.space, x1.space, dual, limits);
    add_report(o, eq.pointwise);
    add_report(o, eq.upsets);
  } catch (const EquivalenceMismatch& e) {
    add_finding(o, Finding{"equivalence", false, {{"error", one_line(e.what())}}});
  }
  return o;
}

Output cmd_eval(const std::string& file, const std::string& formula, const std::string& assign) {
  const auto a = load_algebra(file);
  const auto f = parse_formula(formula);
  const Elem v = eval(f, a, parse_assignment(a, assign));
  Output o;
  o.line("value " + a.name(v));
  o.doc["value"] = a.name(v);
  return o;
}

Output cmd_valid(const std::string& file, const std::string& formula, const Limits& limits) {
  const auto a = load_algebra(file);
  Output o;
  report_validity(o, a, is_valid(parse_formula(formula), a, limits));
  return o;
}

Output cmd_countermodel(const std::string& formula, std::size_t frames, const Limits& limits) {
  const auto f = parse_formula(formula);
  std::optional<Countermodel> found;
  std::string scope;
  if (frames > 0) {
    found = countermodel_search_frames(f, frames, limits);
    scope = "frames<=" + std::to_string(frames);
  } else {
    found = countermodel_search(f, standard_corpus(), limits);
    scope = "corpus";
  }
  Output o;
  o.doc["scope"] = scope;
  if (!found) {
    add_finding(o, Finding{"valid", true, {{"scope", scope}}});
    return o;
  }
  const auto a = build_from_spec(found->algebra, limits).algebra;
  Validity v;
  v.valid = false;
  v.countermodel = found->assignment;
  v.value = found->value;
  report_validity(o, a, v, found->algebra);
  return o;
}

Output cmd_lddt(const std::string& file, const std::string& gamma, const std::string& delta, const std::string& psi,
                const Limits& limits) {
  const auto a = load_algebra(file);
  const auto r = lddt_check(a, element_list(a, gamma), element_list(a, delta), element(a, psi), limits);
  Output o;
  o.line(std::string("lhs ") + (r.lhs ? "true" : "false"));
  std::string rhs = std::string("rhs ") + (r.rhs ? "true" : "false");
  if (r.rhs) rhs += " k=" + std::to_string(*r.k) + " delta=" + format_set(*r.subset, a.names());
  o.line(rhs);
  if (r.degenerate) o.line("degenerate true");
  o.doc["lhs"] = r.lhs;
  o.doc["rhs"] = r.rhs;
  o.doc["degenerate"] = r.degenerate;
  if (r.rhs) {
    o.doc["k"] = *r.k;
    o.doc["delta"] = format_set(*r.subset, a.names());
  }
  add_finding(o, Finding{"lddt", r.holds(), {}});
  return o;
}

Output cmd_gen_example(const std::string& spec, const std::string& out_file, const Limits& limits) {
  const auto named = build_from_spec(spec, limits);
  const std::string text = write_algebra(named.algebra);
  Output o;
  o.doc["algebra"] = text;
  if (out_file.empty()) {
    o.text = text;
  } else {
    write_file(out_file, text);
    o.line("wrote " + out_file + " elements=" + std::to_string(named.algebra.size()));
  }
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite tense H-algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit the report as JSON");

  std::string file, file2, map_file, formula, out_file, from, assign, gamma, delta, psi, spec;
  bool tense = false, check = false, corpus = false;
  std::size_t frames = 0;

  auto* c_check = app.add_subcommand("check", "Scan the axioms and derived laws");
  c_check->add_option("file", file, "Algebra file")->required();
  auto* c_filters = app.add_subcommand("filters", "List filters");
  c_filters->add_option("file", file, "Algebra file")->required();
  c_filters->add_flag("--tense", tense, "Only tense filters");
  auto* c_con = app.add_subcommand("congruences", "List tense congruences");
  c_con->add_option("file", file, "Algebra file")->required();
  auto* c_simple = app.add_subcommand("simple", "Simplicity and subdirect irreducibility");
  c_simple->add_option("file", file, "Algebra file")->required();
  auto* c_gen = app.add_subcommand("generate", "Tense filter generated by a set");
  c_gen->add_option("file", file, "Algebra file")->required();
  c_gen->add_option("--from", from, "Comma separated generators")->required();
  auto* c_dual = app.add_subcommand("dualize", "Prime filter space of an algebra");
  c_dual->add_option("file", file, "Algebra file")->required();
  c_dual->add_option("-o", out_file, "Space file to write");
  auto* c_round = app.add_subcommand("roundtrip", "Verify both round-trip isomorphisms");
  c_round->add_option("file", file, "Algebra or space file")->required();
  auto* c_morph = app.add_subcommand("morphism", "Homomorphism and dual map report");
  c_morph->add_option("algebra1", file, "Domain algebra file")->required();
  c_morph->add_option("algebra2", file2, "Codomain algebra file")->required();
  c_morph->add_option("map", map_file, "Map file")->required();
  c_morph->add_flag("--check", check, "Print the full report");
  auto* c_eval = app.add_subcommand("eval", "Evaluate a formula");
  c_eval->add_option("file", file, "Algebra file")->required();
  c_eval->add_option("formula", formula, "Formula")->required();
  c_eval->add_option("--assign", assign, "x1=a,x2=b");
  auto* c_valid = app.add_subcommand("valid", "Validity in one algebra");
  c_valid->add_option("file", file, "Algebra file")->required();
  c_valid->add_option("formula", formula, "Formula")->required();
  auto* c_cm = app.add_subcommand("countermodel", "Search the corpus or small frames for a countermodel");
  c_cm->add_option("formula", formula, "Formula")->required();
  auto* corpus_flag = c_cm->add_flag("--corpus", corpus, "Library corpus (default)");
  c_cm->add_option("--frames", frames, "All frame algebras up to N points")->excludes(corpus_flag)->check(
      CLI::PositiveNumber);
  auto* c_lddt = app.add_subcommand("lddt", "Deduction-detachment check on elements");
  c_lddt->add_option("file", file, "Algebra file")->required();
  c_lddt->add_option("--gamma", gamma, "Comma separated elements");
  c_lddt->add_option("--delta", delta, "Comma separated elements");
  c_lddt->add_option("--psi", psi, "Element")->required();
  auto* c_ex = app.add_subcommand("gen-example", "Write a library algebra");
  c_ex->add_option("spec", spec, "ej2 | product | extreme:N | frame:N:x-y,...")->required();
  c_ex->add_option("-o", out_file, "Algebra file to write");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Limits limits = Limits::from_environment();
  Output o;
  try {
    if (*c_check) o = cmd_check(file);
    else if (*c_filters) o = cmd_filters(file, tense);
    else if (*c_con) o = cmd_congruences(file);
    else if (*c_simple) o = cmd_simple(file);
    else if (*c_gen) o = cmd_generate(file, from);
    else if (*c_dual) o = cmd_dualize(file, out_file, limits);
    else if (*c_round) o = cmd_roundtrip(file, limits);
    else if (*c_morph) o = cmd_morphism(file, file2, map_file, check, limits);
    else if (*c_eval) o = cmd_eval(file, formula, assign);
    else if (*c_valid) o = cmd_valid(file, formula, limits);
    else if (*c_cm) o = cmd_countermodel(formula, frames, limits);
    else if (*c_lddt) o = cmd_lddt(file, gamma, delta, psi, limits);
    else if (*c_ex) o = cmd_gen_example(spec, out_file, limits);
  } catch (const CharacterizationMismatch& e) {
    err << "FAIL: " << one_line(e.what()) << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return 2;
  }

  if (as_json) {
    o.doc["exit"] = o.code;
    out << o.doc.dump(2) << "\n";
  } else {
    out << o.text;
  }
  return o.code;
}

}  // namespace tensaheyt::cli
