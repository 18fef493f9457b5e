#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "closure_lab/integrality.hpp"
#include "closure_lab/limits.hpp"
#include "closure_lab/monomial_ideal.hpp"

namespace closure_lab {

// One row of a uniform-exponent report:
//   s_bar     = max{s : closure(J)^n in J^s}
//   s_closure = max{s : closure(J^n) in J^s}
// with J^0 the unit ideal.
struct ExponentRow {
  std::uint64_t n = 0;
  std::uint64_t s_bar = 0;
  std::uint64_t s_closure = 0;
};

struct UniformExponentReport {
  MonomialIdeal ideal;
  std::uint64_t n_max = 0;
  std::vector<ExponentRow> rows;
  std::uint64_t k_bar = 0;  // max_n (n - s_bar)
  std::uint64_t k_cl = 0;   // max_n (n - s_closure)
};

// Requires a proper nonzero J and n_max >= 1. Cap overflows are rethrown
// naming the n at which they occurred.
UniformExponentReport uniform_exponents(const MonomialIdeal& j,
                                        std::uint64_t n_max,
                                        const Limits& limits = {});

// J = (x_1^d, ..., x_d^d) and I = J + (x_i^{d-1} x_d : i < d).
struct WitnessPair {
  std::size_t d = 0;
  MonomialIdeal j;
  MonomialIdeal i;
};

WitnessPair witness_pair(std::size_t d);

struct WitnessVerdict {
  std::size_t d = 0;
  bool integral = false;            // I is integral over J
  bool product_is_diagonal = false; // prod x_i^{d-1} x_d = (x_1..x_d)^{d-1}
  bool product_outside_j = false;   // that product is not in J
  bool power_not_in_j = false;      // I^{d-1} is not contained in J
  // Reduction numbers of (x_i^d, x_d^d) in (x_i^d, x_i^{d-1}x_d, x_d^d).
  std::vector<std::uint64_t> pairwise_reduction_numbers;
  bool pass() const {
    return integral && product_is_diagonal && product_outside_j &&
           power_not_in_j;
  }
};

WitnessVerdict verify_witness(std::size_t d, const Limits& limits = {});

struct ContainmentRow {
  std::uint64_t n = 0;
  bool holds = false;
};

struct LipmanSathayeReport {
  std::vector<ContainmentRow> rows;  // closure(J^n) in J^{n-d+1}
  bool holds() const;
};

// Checks d-1 <= n <= n_max. Requires a proper nonzero J.
LipmanSathayeReport lipman_sathaye_check(const MonomialIdeal& j,
                                         std::uint64_t n_max,
                                         const Limits& limits = {});

struct ChainRow {
  std::uint64_t n = 0;
  bool power_in_closure_power = false;          // J^n in closure(J)^n
  bool closure_power_in_closure_of_power = false; // closure(J)^n in closure(J^n)
};

struct ChainReport {
  std::vector<ChainRow> rows;
  bool holds() const;
};

ChainReport chain_check(const MonomialIdeal& j, std::uint64_t n_max,
                        const Limits& limits = {});

// Exponent for the non-reduced ring: (n0 + 1) k + k_1 + ... + k_{n0} where
// n0 = artin_rees.size().
mpz_class nilpotent_lift_bound(const mpz_class& k,
                               std::span<const mpz_class> artin_rees);

struct SamplerConfig {
  std::vector<std::size_t> dims{2, 3};
  std::size_t min_generators = 2;
  std::size_t max_generators = 5;
  std::uint64_t max_exponent = 6;
};

// Seeded random proper nonzero monomial ideals. The stream depends only on
// the seed and the config.
class IdealSampler {
 public:
  IdealSampler(std::uint64_t seed, SamplerConfig config = {});

  MonomialIdeal next();
  ExponentVector random_monomial(std::size_t dim, std::uint64_t max_exponent);
  // Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  SamplerConfig config_;
  std::mt19937_64 engine_;
};

struct TrialRecord {
  std::size_t index = 0;
  MonomialIdeal ideal;
  UniformExponentReport exponents;
  bool chain = false;
  bool lipman_sathaye = false;
  bool exponent_bounds = false;  // k_bar <= k_cl <= d - 1
  MonomialIdeal overideal;       // J + (random monomial)
  bool integral = false;
  std::optional<std::uint64_t> reduction_k;
  bool equivalence_agrees = false;
  bool passed() const {
    return chain && lipman_sathaye && exponent_bounds && equivalence_agrees;
  }
};

struct SuiteResult {
  std::uint64_t seed = 0;
  std::uint64_t n_max = 0;
  std::uint64_t k_max = 0;
  std::vector<TrialRecord> trials;
  std::size_t failures() const;
};

SuiteResult run_sample_suite(std::size_t trials, std::uint64_t seed,
                             std::uint64_t n_max, std::uint64_t k_max,
                             const Limits& limits = {});

}  // namespace closure_lab
