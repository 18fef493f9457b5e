#include "closure_lab/rational_simplex.hpp"

#include <cstddef>
#include <limits>

#include "closure_lab/error.hpp"

namespace closure_lab {

FeasibilityResult solve_feasibility(
    const std::vector<std::vector<mpq_class>>& rows,
    const std::vector<mpq_class>& rhs) {
  const std::size_t m = rows.size();
  if (rhs.size() != m)
    throw PreconditionError("row count and right-hand side differ");
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw PreconditionError("ragged constraint matrix");

  // Columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  const std::size_t rhs_col = n + m;
  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(width));
  std::vector<bool> flipped(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    flipped[i] = sgn(rhs[i]) < 0;
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = flipped[i] ? mpq_class(-rows[i][j]) : rows[i][j];
    t[i][n + i] = 1;
    t[i][rhs_col] = flipped[i] ? mpq_class(-rhs[i]) : rhs[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs of the phase-1 objective (sum of artificials); the last
  // entry holds minus the current objective value.
  std::vector<mpq_class> cost(width);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
    cost[rhs_col] -= t[i][rhs_col];
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    mpq_class best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      mpq_class ratio = t[i][rhs_col] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase-1 is bounded below by zero, so some row always qualifies.
    if (leave == m) throw InternalInconsistency("unbounded phase-1 problem");

    const mpq_class pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const mpq_class factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(t[leave][j]) != 0) t[i][j] -= factor * t[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      const mpq_class factor = cost[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(t[leave][j]) != 0) cost[j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }

  FeasibilityResult result;
  const mpq_class objective = -cost[rhs_col];
  if (sgn(objective) == 0) {
    result.feasible = true;
    result.solution.assign(n, mpq_class(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) result.solution[basis[i]] = t[i][rhs_col];
    return result;
  }

  // y^T = c_B^T B^{-1}; the artificial columns of the tableau hold B^{-1}.
  result.farkas.assign(m, mpq_class(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (std::size_t k = 0; k < m; ++k) result.farkas[k] += t[i][n + k];
  }
  for (std::size_t k = 0; k < m; ++k)
    if (flipped[k]) result.farkas[k] = -result.farkas[k];
  return result;
}

}  // namespace closure_lab
