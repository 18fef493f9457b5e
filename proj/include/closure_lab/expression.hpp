#pragma once

#include <span>
#include <string>
#include <string_view>

#include "closure_lab/polynomial.hpp"

namespace closure_lab {

// Grammar (whitespace insignificant):
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER ('/' INTEGER)? | IDENT | '(' expr ')'
// Errors carry the 1-based line and column of the offending token.
Polynomial parse_polynomial(std::string_view text,
                            std::span<const std::string> vars);

// Inverse of parse_polynomial: terms in descending `order`, e.g.
// "x^2*y - 3/2*y^3 + 1".
std::string format_polynomial(const Polynomial& p,
                              std::span<const std::string> vars,
                              TermOrder order = TermOrder::Grevlex);
std::string format_monomial(const ExponentVector& e,
                            std::span<const std::string> vars);

// x1, x2, ..., xd
std::vector<std::string> default_variable_names(std::size_t dim);

}  // namespace closure_lab
