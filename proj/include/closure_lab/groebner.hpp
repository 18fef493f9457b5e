#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "closure_lab/limits.hpp"
#include "closure_lab/monomial_ideal.hpp"
#include "closure_lab/polynomial.hpp"
#include "closure_lab/term_order.hpp"

namespace closure_lab {

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

// f = sum quotients[i] * divisors[i] + remainder, with no remainder term
// divisible by any leading term of the divisors. Divisors are tried in the
// given order, so the result is deterministic.
DivisionResult normal_form(const Polynomial& f,
                           std::span<const Polynomial> divisors,
                           TermOrder order);

// Reduced Groebner basis with transformation matrix: for every i,
// basis[i] = sum_j cofactors[i][j] * generators[j]. Elements are monic and
// sorted by descending leading term.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;
};

class PolyIdeal {
 public:
  // Throws PreconditionError on a zero generator.
  PolyIdeal(std::size_t dim, std::vector<Polynomial> generators);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  // The cached basis, if one was computed for `order`.
  const GroebnerBasis* cached_basis(TermOrder order) const;

 private:
  friend PolyIdeal buchberger(const PolyIdeal&, TermOrder, const Limits&);

  std::size_t dim_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<const GroebnerBasis> gb_;
};

PolyIdeal to_poly_ideal(const MonomialIdeal& ideal);

// Returns a copy of `ideal` carrying its reduced basis for `order`. Raises
// CapExceeded when more than limits.spair_cap S-pairs are generated.
PolyIdeal buchberger(const PolyIdeal& ideal, TermOrder order,
                     const Limits& limits = {});

// Reduced basis of `ideal`, reusing the cache when present.
GroebnerBasis groebner_basis(const PolyIdeal& ideal, TermOrder order,
                             const Limits& limits = {});

// Exact re-check of every cofactor row.
bool cofactors_hold(const PolyIdeal& ideal, const GroebnerBasis& gb);

struct MembershipResult {
  bool member = false;
  // Over the reduced basis, and composed back onto the original generators.
  std::vector<Polynomial> basis_quotients;
  std::vector<Polynomial> generator_quotients;
};

MembershipResult poly_ideal_member(const Polynomial& f, const PolyIdeal& ideal,
                                   TermOrder order, const Limits& limits = {});

bool poly_ideal_equal(const PolyIdeal& a, const PolyIdeal& b, TermOrder order,
                      const Limits& limits = {});

// Generator lists are concatenations / pairwise products / n-fold products
// without any minimization. a^0 is the unit ideal.
PolyIdeal poly_ideal_sum(const PolyIdeal& a, const PolyIdeal& b,
                         const Limits& limits = {});
PolyIdeal poly_ideal_product(const PolyIdeal& a, const PolyIdeal& b,
                             const Limits& limits = {});
PolyIdeal poly_ideal_power(const PolyIdeal& a, std::uint64_t n,
                           const Limits& limits = {});

}  // namespace closure_lab
