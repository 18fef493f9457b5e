#pragma once

#include <vector>

#include "closure_lab/polynomial.hpp"

namespace closure_lab {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Fraction-free Bareiss elimination. Every intermediate division is exact
// over a polynomial ring; a non-exact one raises InternalInconsistency.
Polynomial determinant_bareiss(PolyMatrix m);

// Laplace expansion along rows, memoized on the set of used columns.
Polynomial determinant_cofactor(const PolyMatrix& m);

// a / b when b divides a exactly; InternalInconsistency otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

}  // namespace closure_lab
