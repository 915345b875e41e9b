#pragma once

#include <string_view>

#include "tensaheyt/formula.hpp"

namespace tensaheyt {

/// Parses the concrete syntax
///
///   formula := imp ("<->" imp)? ; imp := or ("->" imp)? ; or := and ("|" and)* ;
///   and := unary ("&" unary)* ;
///   unary := ("~"|"g"|"h"|"f"|"p") unary | atom ;
///   atom := "bot" | "top" | VAR | "(" formula ")" ; VAR := "x" [0-9]+
///
/// Words are read greedily, so a prefix operator needs a space or a
/// parenthesis before its operand (`g x1`, `g(x1)`). Throws UnknownSymbol
/// for characters or words outside the language and SyntaxError for
/// misplaced tokens, both carrying the byte offset.
Formula parse_formula(std::string_view text);

}  // namespace tensaheyt
