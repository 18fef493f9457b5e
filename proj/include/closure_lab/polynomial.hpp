#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>

#include "closure_lab/exponent_vector.hpp"
#include "closure_lab/term_order.hpp"

namespace closure_lab {

struct Term {
  ExponentVector exponent;
  mpq_class coefficient;
};

// Sparse polynomial in Q[x_1..x_d]. No zero coefficient is ever stored;
// the zero polynomial has no terms.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, mpq_class>;

  explicit Polynomial(std::size_t dim);
  static Polynomial constant(std::size_t dim, const mpq_class& c);
  static Polynomial monomial(const ExponentVector& e, const mpq_class& c = 1);
  static Polynomial variable(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return dim_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Exactly one term (any nonzero coefficient).
  bool is_term() const noexcept { return terms_.size() == 1; }
  bool is_constant() const;

  mpq_class coefficient(const ExponentVector& e) const;
  // Requires a nonzero polynomial.
  Term leading_term(TermOrder order) const;

  // Adds c*x^e in place.
  void add_term(const ExponentVector& e, const mpq_class& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const mpq_class& c, const Polynomial& p);
  Polynomial times_term(const ExponentVector& e, const mpq_class& c) const;
  Polynomial pow(std::uint64_t n) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t dim_;
  Terms terms_;
};

}  // namespace closure_lab
