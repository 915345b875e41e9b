#include "tensaheyt/parser.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "tensaheyt/errors.hpp"

namespace tensaheyt {
namespace {

enum class Tok { Var, Bot, Top, And, Or, Imp, Iff, Not, Op, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  unsigned index = 0;        // Var
  TenseOp op = TenseOp::g;   // Op
  std::string_view text;
};

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + std::string(t.text) + "'"; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    switch (c) {
      case '&': out.push_back({Tok::And, start, 0, {}, s.substr(i, 1)}); ++i; continue;
      case '|': out.push_back({Tok::Or, start, 0, {}, s.substr(i, 1)}); ++i; continue;
      case '~': out.push_back({Tok::Not, start, 0, {}, s.substr(i, 1)}); ++i; continue;
      case '(': out.push_back({Tok::LParen, start, 0, {}, s.substr(i, 1)}); ++i; continue;
      case ')': out.push_back({Tok::RParen, start, 0, {}, s.substr(i, 1)}); ++i; continue;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::Imp, start, 0, {}, s.substr(i, 2)});
          i += 2;
          continue;
        }
        throw UnknownSymbol("unknown symbol '-'", start);
      case '<':
        if (s.substr(i, 3) == "<->") {
          out.push_back({Tok::Iff, start, 0, {}, s.substr(i, 3)});
          i += 3;
          continue;
        }
        throw UnknownSymbol("unknown symbol '<'", start);
      default: break;
    }
    if (!is_word(c)) throw UnknownSymbol("unknown symbol '" + std::string(1, c) + "'", start);
    while (i < s.size() && is_word(s[i])) ++i;
    const std::string_view word = s.substr(start, i - start);
    if (word == "bot") {
      out.push_back({Tok::Bot, start, 0, {}, word});
    } else if (word == "top") {
      out.push_back({Tok::Top, start, 0, {}, word});
    } else if (auto op = op_from_name(word)) {
      out.push_back({Tok::Op, start, 0, *op, word});
    } else if (word.size() > 1 && word[0] == 'x' &&
               word.find_first_not_of("0123456789", 1) == std::string_view::npos) {
      unsigned index = 0;
      const auto [ptr, ec] = std::from_chars(word.data() + 1, word.data() + word.size(), index);
      if (ec != std::errc{}) throw UnknownSymbol("variable index out of range in '" + std::string(word) + "'", start);
      out.push_back({Tok::Var, start, index, {}, word});
    } else {
      throw UnknownSymbol("unknown word '" + std::string(word) + "'", start);
    }
  }
  out.push_back({Tok::End, s.size(), 0, {}, {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    Formula f = iff();
    if (peek().kind != Tok::End) throw SyntaxError("unexpected " + describe(peek()), peek().offset);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  // a <-> b abbreviates (a -> b) & (b -> a) and binds loosest
  Formula iff() {
    Formula lhs = imp();
    if (peek().kind == Tok::Iff) {
      next();
      return Formula::iff(std::move(lhs), imp());
    }
    return lhs;
  }

  Formula imp() {
    Formula lhs = disj();
    if (peek().kind == Tok::Imp) {
      next();
      return Formula::imp(std::move(lhs), imp());
    }
    return lhs;
  }

  Formula disj() {
    Formula lhs = conj();
    while (peek().kind == Tok::Or) {
      next();
      lhs = Formula::disj(std::move(lhs), conj());
    }
    return lhs;
  }

  Formula conj() {
    Formula lhs = unary();
    while (peek().kind == Tok::And) {
      next();
      lhs = Formula::conj(std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      next();
      return Formula::neg(unary());
    }
    if (peek().kind == Tok::Op) {
      const TenseOp op = next().op;
      return Formula::unary(op, unary());
    }
    return atom();
  }

  Formula atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Bot: return Formula::bot();
      case Tok::Top: return Formula::top();
      case Tok::Var: return Formula::var(t.index);
      case Tok::LParen: {
        Formula inner = iff();
        if (peek().kind != Tok::RParen) throw SyntaxError("expected ')' but found " + describe(peek()), peek().offset);
        next();
        return inner;
      }
      default: throw SyntaxError("expected a formula but found " + describe(t), t.offset);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(lex(text)).parse(); }

}  // namespace tensaheyt
