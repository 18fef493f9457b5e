#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls the library's minimalize, ideal_power or closure.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "closure_lab/exponent_vector.hpp"
#include "closure_lab/polynomial.hpp"

namespace oracle {

using closure_lab::ExponentVector;
using Points = std::vector<std::vector<long>>;

inline bool leq(const std::vector<long>& a, const std::vector<long>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Elements not strictly dominated by another, deduplicated and sorted.
inline Points minimal(Points pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Points out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t k = 0; k < pts.size() && !dominated; ++k)
      dominated = k != i && leq(pts[k], pts[i]);
    if (!dominated) out.push_back(pts[i]);
  }
  return out;
}

inline Points sums(const Points& a, const Points& b) {
  Points out;
  for (const auto& x : a)
    for (const auto& y : b) {
      std::vector<long> s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      out.push_back(std::move(s));
    }
  return out;
}

// Every sum of n generators, unminimized.
inline Points power_unminimized(const Points& gens, std::size_t dim,
                                unsigned n) {
  Points acc{std::vector<long>(dim, 0)};
  for (unsigned k = 0; k < n; ++k) acc = sums(acc, gens);
  return acc;
}

inline bool contains(const Points& gens, const std::vector<long>& m) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const auto& g) { return leq(g, m); });
}

// m is integral over J iff n*m lies in J^n for some n; true answers are
// exact, false answers are only up to n_max.
inline bool scaling_member(const Points& gens, std::size_t dim,
                           const std::vector<long>& m, unsigned n_max) {
  Points power{std::vector<long>(dim, 0)};
  for (unsigned n = 1; n <= n_max; ++n) {
    power = minimal(sums(power, gens));
    std::vector<long> scaled(m);
    for (auto& c : scaled) c *= n;
    if (contains(power, scaled)) return true;
  }
  return false;
}

// Minimal generators of the closure found with the scaling test over the
// box [0, max_j]^d.
inline Points scaling_closure(const Points& gens, std::size_t dim,
                              unsigned n_max) {
  std::vector<long> hi(dim, 0);
  for (const auto& g : gens)
    for (std::size_t j = 0; j < dim; ++j) hi[j] = std::max(hi[j], g[j]);
  Points members;
  std::vector<long> p(dim, 0);
  for (bool done = false; !done;) {
    if (scaling_member(gens, dim, p, n_max)) members.push_back(p);
    done = true;
    for (std::size_t j = dim; j-- > 0;) {
      if (++p[j] <= hi[j]) {
        done = false;
        break;
      }
      p[j] = 0;
    }
  }
  return minimal(members);
}

inline std::vector<long> to_small(const ExponentVector& e) {
  std::vector<long> out;
  for (const auto& c : e.coords()) out.push_back(c.get_si());
  return out;
}

inline ExponentVector to_exponent(const std::vector<long>& v) {
  std::vector<mpz_class> coords(v.begin(), v.end());
  return ExponentVector(std::move(coords));
}

inline Points to_points(const std::vector<ExponentVector>& gens) {
  Points out;
  for (const auto& g : gens) out.push_back(to_small(g));
  std::sort(out.begin(), out.end());
  return out;
}

// Leibniz expansion over all permutations.
inline closure_lab::Polynomial leibniz_determinant(
    const std::vector<std::vector<closure_lab::Polynomial>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  closure_lab::Polynomial det(m[0][0].dim());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k) inversions += perm[i] > perm[k];
    closure_lab::Polynomial term =
        closure_lab::Polynomial::constant(m[0][0].dim(), 1);
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    if (inversions % 2) det -= term; else det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Random exponent sets for property tests.
inline Points random_points(std::mt19937_64& rng, std::size_t dim,
                            std::size_t count, long max_exp) {
  Points out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<long> v(dim);
    for (auto& c : v) c = static_cast<long>(rng() % (max_exp + 1));
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<ExponentVector> to_exponents(const Points& pts) {
  std::vector<ExponentVector> out;
  for (const auto& p : pts) out.push_back(to_exponent(p));
  return out;
}

}  // namespace oracle
