#pragma once

#include <string>
#include <string_view>

#include "nodal/core/polynomial.hpp"

namespace nodal {

// Grammar (whitespace insensitive):
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' INT)?
//   atom   := INT ('/' INT)? | VAR | '(' expr ')'
// Variables are names from `alphabet`. Throws SyntaxError (with position and
// expected tokens) or UnknownVariable.
QPoly parse_poly(std::string_view text, VarSet alphabet);

// Reads `source` as a file path when such a file exists, else as an expression.
std::string read_expression_source(const std::string& source);

}  // namespace nodal
