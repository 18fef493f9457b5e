#pragma once

#include <gmpxx.h>

#include <vector>

namespace closure_lab {

// Outcome of a phase-1 feasibility solve for {x >= 0 : A x = b}.
// On success `solution` is a basic feasible point. On failure `farkas`
// is a vector y with y^T A <= 0 componentwise and y^T b > 0.
struct FeasibilityResult {
  bool feasible = false;
  std::vector<mpq_class> solution;
  std::vector<mpq_class> farkas;
};

// Exact phase-1 simplex with Bland's rule. `rows` is dense, row-major,
// every row of the same length. The right-hand side may have any sign.
FeasibilityResult solve_feasibility(
    const std::vector<std::vector<mpq_class>>& rows,
    const std::vector<mpq_class>& rhs);

}  // namespace closure_lab
