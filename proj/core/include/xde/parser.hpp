#pragma once

#include <string>

#include "xde/expr.hpp"

namespace xde {

// Recursive-descent parser for the expression grammar:
//
//   expr    := term (("+" | "-") term)*
//   term    := factor ("*" factor)*
//   factor  := atom ("^" ("-")? integer)?
//   atom    := number | "x" | "y" | func "(" expr ")" | "(" expr ")" | "-" atom
//   func    := "sin" | "cos" | "exp" | "ln"
//   number  := integer ("/" integer)? | decimal
//
// Whitespace is insignificant; multiplication is always explicit; decimals
// become exact rationals. Returns the unnormalized AST faithful to the input.
// Throws SyntaxError (with byte offset and expected-token set) or
// UnsupportedConstruct (non-integer exponent, unknown function name).
Expr parse(const std::string& text);

} // namespace xde
