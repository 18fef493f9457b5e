#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace closure_lab {

// A lattice point in N^d: the exponent of a monomial x_1^{a_1}...x_d^{a_d}.
// Coordinates are arbitrary precision and always nonnegative.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim);
  explicit ExponentVector(std::vector<mpz_class> coords);
  ExponentVector(std::initializer_list<long> coords);

  static ExponentVector unit(std::size_t dim, std::size_t index,
                             const mpz_class& power = 1);

  std::size_t dim() const noexcept { return coords_.size(); }
  const mpz_class& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const mpz_class> coords() const noexcept { return coords_; }

  mpz_class total_degree() const;
  bool is_zero() const;

  // Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;

  ExponentVector operator+(const ExponentVector& other) const;
  // Componentwise difference; requires other.divides(*this).
  ExponentVector operator-(const ExponentVector& other) const;
  ExponentVector scaled(const mpz_class& factor) const;
  ExponentVector lcm(const ExponentVector& other) const;
  bool coprime(const ExponentVector& other) const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b);
  // Lexicographic on coordinates; used for canonical container order only.
  friend std::strong_ordering operator<=>(const ExponentVector& a,
                                          const ExponentVector& b);

  std::string to_string() const;

 private:
  std::vector<mpz_class> coords_;
};

void require_same_dim(std::size_t expected, std::size_t got);

}  // namespace closure_lab
