#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "closure_lab/exponent_vector.hpp"
#include "closure_lab/limits.hpp"

namespace closure_lab {

// A monomial ideal in Q[x_1..x_d], stored as the antichain of its minimal
// generator exponents in ascending lexicographic order. The zero ideal has
// no generators; the unit ideal has the single generator 0.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t dim);  // zero ideal
  MonomialIdeal(std::size_t dim, std::span<const ExponentVector> generators);
  MonomialIdeal(std::size_t dim, std::initializer_list<ExponentVector> gens);

  static MonomialIdeal zero(std::size_t dim) { return MonomialIdeal(dim); }
  static MonomialIdeal unit(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExponentVector>& generators() const noexcept {
    return gens_;
  }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept {
    return gens_.size() == 1 && gens_.front().is_zero();
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  struct Minimal {};
  MonomialIdeal(Minimal, std::size_t dim, std::vector<ExponentVector> gens)
      : dim_(dim), gens_(std::move(gens)) {}
  friend MonomialIdeal minimalize(std::size_t,
                                  std::span<const ExponentVector>,
                                  const Limits&);

  std::size_t dim_;
  std::vector<ExponentVector> gens_;
};

// The ideal generated by `gens`, reduced to its minimal generators.
// Raises CapExceeded if more than limits.generator_cap survive.
MonomialIdeal minimalize(std::size_t dim, std::span<const ExponentVector> gens,
                         const Limits& limits = {});

bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& m);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b,
                        const Limits& limits = {});
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b,
                            const Limits& limits = {});
// a^0 is the unit ideal.
MonomialIdeal ideal_power(const MonomialIdeal& a, std::uint64_t n,
                          const Limits& limits = {});
// True iff b is a subset of a.
bool ideal_contains(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace closure_lab
