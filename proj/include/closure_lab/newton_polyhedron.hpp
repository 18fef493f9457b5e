#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "closure_lab/exponent_vector.hpp"
#include "closure_lab/limits.hpp"
#include "closure_lab/monomial_ideal.hpp"

namespace closure_lab {

// NP = conv(vertices) + R_{>=0}^d. The integer points of NP(J) are exactly
// the exponents of monomials in the integral closure of J.
class NewtonPolyhedron {
 public:
  // Throws PreconditionError on an empty vertex set.
  NewtonPolyhedron(std::size_t dim, std::vector<ExponentVector> vertices);
  explicit NewtonPolyhedron(const MonomialIdeal& ideal);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExponentVector>& vertices() const noexcept {
    return vertices_;
  }

 private:
  std::size_t dim_;
  std::vector<ExponentVector> vertices_;
};

// Convex weights lambda_i >= 0, sum 1, with sum lambda_i v_i <= point.
struct RationalCertificate {
  std::vector<mpq_class> lambdas;

  // Exact re-check of both invariants against `poly` and `point`.
  bool verify(const NewtonPolyhedron& poly, const ExponentVector& point) const;
  // Least common multiple of the weight denominators.
  mpz_class denominator_lcm() const;
};

// A valid inequality normal . x >= offset for NP with normal >= 0, violated
// by the query point.
struct SeparatingHalfspace {
  std::vector<mpz_class> normal;
  mpz_class offset;

  bool separates(const NewtonPolyhedron& poly,
                 const ExponentVector& point) const;
};

struct NpMembership {
  bool member = false;
  std::optional<RationalCertificate> certificate;
  std::optional<SeparatingHalfspace> separator;
};

NpMembership np_member(const NewtonPolyhedron& poly, const ExponentVector& a);

// Integral closure of a monomial ideal by box enumeration.
//
// Every minimal integer point a of NP(J) satisfies a_j <= max_i v_{i,j}:
// if a_j were larger, a - e_j would still dominate the same convex
// combination of vertices (each has j-th coordinate <= max < a_j), so a
// would not be minimal. Enumerating the box prod_j [0, max_i v_{i,j}]
// therefore finds every minimal generator.
//
// closure(0) = 0. Raises CapExceeded when the box holds more than
// limits.box_point_cap points.
MonomialIdeal closure(const MonomialIdeal& ideal, const Limits& limits = {});

// Requires a nonzero ideal.
bool closure_member(const MonomialIdeal& ideal, const ExponentVector& m);

}  // namespace closure_lab
