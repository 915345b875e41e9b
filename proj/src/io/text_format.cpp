#include "tensaheyt/text_format.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tensaheyt/errors.hpp"

namespace tensaheyt {
namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::vector<std::string> words;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto colon = raw.find(':');
    if (colon == std::string_view::npos) {
      if (raw.find_first_not_of(" \t\r") != std::string_view::npos) fail(number, "expected 'key: ...'");
      continue;
    }
    Line line{number, {}, {}};
    std::istringstream key_words{std::string(raw.substr(0, colon))};
    std::string w;
    while (key_words >> w) line.key += (line.key.empty() ? "" : " ") + w;
    std::istringstream words{std::string(raw.substr(colon + 1))};
    while (words >> w) line.words.push_back(w);
    out.push_back(std::move(line));
  }
  return out;
}

class NameTable {
 public:
  NameTable(const Line& line, std::string_view what) {
    if (line.words.empty()) fail(line.number, std::string(what) + " list is empty");
    for (const auto& w : line.words) {
      if (w.find("->") != std::string::npos || w.find('<') != std::string::npos) {
        fail(line.number, "name '" + w + "' may not contain '<' or '->'");
      }
      if (!ids_.emplace(w, static_cast<Elem>(names_.size())).second) fail(line.number, "duplicate name '" + w + "'");
      names_.push_back(w);
    }
  }
  Elem id(std::size_t line, const std::string& name) const {
    const auto it = ids_.find(name);
    if (it == ids_.end()) fail(line, "unknown name '" + name + "'");
    return it->second;
  }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Elem> ids_;
};

std::pair<std::string, std::string> split_pair(std::size_t line, const std::string& word, std::string_view sep) {
  const auto at = word.find(sep);
  if (at == std::string::npos || at == 0 || at + sep.size() >= word.size()) {
    fail(line, "malformed entry '" + word + "', expected x" + std::string(sep) + "y");
  }
  return {word.substr(0, at), word.substr(at + sep.size())};
}

std::vector<std::pair<Elem, Elem>> read_pairs(const Line& line, const NameTable& names, std::string_view sep) {
  std::vector<std::pair<Elem, Elem>> out;
  for (const auto& w : line.words) {
    const auto [lhs, rhs] = split_pair(line.number, w, sep);
    out.emplace_back(names.id(line.number, lhs), names.id(line.number, rhs));
  }
  return out;
}

// Groups lines by key, rejecting unknown and repeated keys.
std::map<std::string, const Line*> index_keys(const std::vector<Line>& lines, const std::set<std::string>& allowed) {
  std::map<std::string, const Line*> out;
  for (const auto& line : lines) {
    if (!allowed.count(line.key)) fail(line.number, "unknown key '" + line.key + "'");
    if (!out.emplace(line.key, &line).second) fail(line.number, "duplicate key '" + line.key + "'");
  }
  return out;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += " " + n;
  return out;
}

}  // namespace

TenseHAlgebra AlgebraText::to_tense() const {
  std::array<OpTable, 4> tables;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!ops[i]) throw FormatError("missing operator '" + std::string(op_name(kTenseOps[i])) + "'");
    tables[i] = *ops[i];
  }
  return TenseHAlgebra(heyting, tables);
}

AlgebraText parse_algebra_text(std::string_view text) {
  const auto lines = split_lines(text);
  const auto keys = index_keys(lines, {"elements", "leq", "op g", "op h", "op f", "op p"});
  const auto el = keys.find("elements");
  if (el == keys.end()) throw FormatError("missing 'elements:' line");
  const NameTable names(*el->second, "element");

  std::vector<std::pair<Elem, Elem>> covers;
  if (const auto leq = keys.find("leq"); leq != keys.end()) covers = read_pairs(*leq->second, names, "<");
  auto lattice = build_lattice(FinitePoset::from_covers(names.names(), covers));
  AlgebraText out{heyting_implication(std::move(lattice)), {}};

  for (TenseOp op : kTenseOps) {
    const auto it = keys.find("op " + std::string(op_name(op)));
    if (it == keys.end()) continue;
    const Line& line = *it->second;
    std::vector<std::optional<Elem>> table(names.names().size());
    for (const auto& [x, y] : read_pairs(line, names, "->")) {
      if (table[x]) fail(line.number, "duplicate entry for '" + names.names()[x] + "'");
      table[x] = y;
    }
    OpTable filled;
    for (Elem x = 0; x < table.size(); ++x) {
      if (!table[x]) fail(line.number, "no entry for '" + names.names()[x] + "'");
      filled.push_back(*table[x]);
    }
    out.ops[static_cast<std::size_t>(op)] = std::move(filled);
  }
  return out;
}

TenseHAlgebra read_tense_algebra(std::string_view text) { return parse_algebra_text(text).to_tense(); }

std::string write_algebra(const TenseHAlgebra& a) {
  std::string out = "elements:" + join_names(a.names()) + "\n";
  out += "leq:";
  for (const auto& [x, y] : a.poset().covers()) out += " " + a.name(x) + "<" + a.name(y);
  out += "\n";
  for (TenseOp op : kTenseOps) {
    out += "op " + std::string(op_name(op)) + ":";
    for (Elem x = 0; x < a.size(); ++x) out += " " + a.name(x) + "->" + a.name(a.apply(op, x));
    out += "\n";
  }
  return out;
}

std::string write_space(const TenseHSpace& x) {
  std::string out = "points:" + join_names(x.names()) + "\n";
  out += "leq:";
  for (const auto& [p, q] : x.poset.covers()) out += " " + x.name(p) + "<" + x.name(q);
  out += "\nrel R:";
  for (const auto& [p, q] : x.r.pairs()) out += " " + x.name(p) + "->" + x.name(q);
  out += "\n";
  return out;
}

TenseHSpace read_space(std::string_view text) {
  const auto lines = split_lines(text);
  const auto keys = index_keys(lines, {"points", "leq", "rel R"});
  const auto pts = keys.find("points");
  if (pts == keys.end()) throw FormatError("missing 'points:' line");
  const NameTable names(*pts->second, "point");
  std::vector<std::pair<Elem, Elem>> covers, rel;
  if (const auto leq = keys.find("leq"); leq != keys.end()) covers = read_pairs(*leq->second, names, "<");
  if (const auto r = keys.find("rel R"); r != keys.end()) rel = read_pairs(*r->second, names, "->");
  const std::size_t n = names.names().size();
  return TenseHSpace{FinitePoset::from_covers(names.names(), covers), Relation::from_pairs(n, rel)};
}

std::vector<Elem> read_map(std::string_view text, const std::vector<std::string>& domain,
                           const std::vector<std::string>& codomain) {
  std::map<std::string, Elem> dom, cod;
  for (Elem i = 0; i < domain.size(); ++i) dom.emplace(domain[i], i);
  for (Elem i = 0; i < codomain.size(); ++i) cod.emplace(codomain[i], i);

  std::vector<std::optional<Elem>> image(domain.size());
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::string w;
    while (words >> w) {
      const auto [lhs, rhs] = split_pair(number, w, "->");
      const auto from = dom.find(lhs);
      if (from == dom.end()) fail(number, "unknown domain name '" + lhs + "'");
      const auto to = cod.find(rhs);
      if (to == cod.end()) fail(number, "unknown codomain name '" + rhs + "'");
      if (image[from->second]) fail(number, "duplicate entry for '" + lhs + "'");
      image[from->second] = to->second;
    }
  }
  std::vector<Elem> out;
  for (Elem i = 0; i < image.size(); ++i) {
    if (!image[i]) throw FormatError("map has no entry for '" + domain[i] + "'");
    out.push_back(*image[i]);
  }
  return out;
}

std::string write_map(const std::vector<Elem>& map, const std::vector<std::string>& domain,
                      const std::vector<std::string>& codomain) {
  std::string out;
  for (Elem i = 0; i < map.size(); ++i) out += domain[i] + "->" + codomain[map[i]] + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw FormatError("cannot write '" + path + "'");
}

}  // namespace tensaheyt
