#pragma once

#include <compare>
#include <string_view>

#include "closure_lab/exponent_vector.hpp"

namespace closure_lab {

// Monomial orders with variable priority x_1 > x_2 > ... > x_d.
enum class TermOrder { Grevlex, Lex };

std::strong_ordering compare(TermOrder order, const ExponentVector& a,
                             const ExponentVector& b);

std::string_view to_string(TermOrder order);
// Accepts "grevlex" or "lex"; throws PreconditionError otherwise.
TermOrder term_order_from_string(std::string_view name);

}  // namespace closure_lab
