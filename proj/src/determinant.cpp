#include "closure_lab/determinant.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>

#include "closure_lab/error.hpp"
#include "closure_lab/groebner.hpp"

namespace closure_lab {

namespace {

std::size_t square_size(const PolyMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw PreconditionError("matrix is not square");
  if (m.empty()) throw PreconditionError("empty matrix");
  return m.size();
}

}  // namespace

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  const Polynomial divisors[] = {b};
  DivisionResult div = normal_form(a, divisors, TermOrder::Lex);
  if (!div.remainder.is_zero())
    throw InternalInconsistency("inexact polynomial division");
  return std::move(div.quotients.front());
}

Polynomial determinant_bareiss(PolyMatrix m) {
  const std::size_t n = square_size(m);
  const std::size_t d = m[0][0].dim();
  bool negate = false;
  Polynomial prev = Polynomial::constant(d, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(d);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? (1 / prev.coefficient(ExponentVector(d))) * num
                                     : exact_quotient(num, prev);
      }
      m[i][k] = Polynomial(d);
    }
    prev = m[k][k];
  }
  Polynomial det = std::move(m[n - 1][n - 1]);
  return negate ? -det : det;
}

Polynomial determinant_cofactor(const PolyMatrix& m) {
  const std::size_t n = square_size(m);
  if (n > 20) throw PreconditionError("cofactor expansion limited to 20 rows");
  const std::size_t d = m[0][0].dim();
  std::vector<std::optional<Polynomial>> memo(std::size_t{1} << n);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;

  auto rec = [&](auto&& self, std::uint32_t used) -> const Polynomial& {
    auto& slot = memo[used];
    if (slot) return *slot;
    if (used == full) return slot.emplace(Polynomial::constant(d, 1));
    const std::size_t row = std::popcount(used);
    Polynomial sum(d);
    std::size_t position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint32_t bit = std::uint32_t{1} << c;
      if (used & bit) continue;
      if (!m[row][c].is_zero()) {
        Polynomial term = m[row][c] * self(self, used | bit);
        if (position % 2) sum -= term; else sum += term;
      }
      ++position;
    }
    return slot.emplace(std::move(sum));
  };
  return rec(rec, 0);
}

}  // namespace closure_lab
