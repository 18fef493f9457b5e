#include "closure_lab/term_order.hpp"

#include <string>

#include "closure_lab/error.hpp"

namespace closure_lab {

namespace {

std::strong_ordering sign_to_order(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(TermOrder order, const ExponentVector& a,
                             const ExponentVector& b) {
  require_same_dim(a.dim(), b.dim());
  const std::size_t d = a.dim();
  if (order == TermOrder::Lex) {
    for (std::size_t i = 0; i < d; ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return sign_to_order(c);
    }
    return std::strong_ordering::equal;
  }
  int c = cmp(a.total_degree(), b.total_degree());
  if (c != 0) return sign_to_order(c);
  // Ties: the smaller exponent in the last differing variable wins.
  for (std::size_t i = d; i-- > 0;) {
    c = cmp(a[i], b[i]);
    if (c != 0) return sign_to_order(-c);
  }
  return std::strong_ordering::equal;
}

std::string_view to_string(TermOrder order) {
  return order == TermOrder::Lex ? "lex" : "grevlex";
}

TermOrder term_order_from_string(std::string_view name) {
  if (name == "grevlex") return TermOrder::Grevlex;
  if (name == "lex") return TermOrder::Lex;
  throw PreconditionError("unknown term order `" + std::string(name) + "`");
}

}  // namespace closure_lab
