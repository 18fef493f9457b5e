#include "closure_lab/lab.hpp"

#include <algorithm>
#include <string>

#include "closure_lab/error.hpp"
#include "closure_lab/newton_polyhedron.hpp"

namespace closure_lab {

namespace {

void require_proper_nonzero(const MonomialIdeal& j) {
  if (j.is_zero()) throw PreconditionError("ideal must be nonzero");
  if (j.is_unit()) throw PreconditionError("ideal must be proper");
}

// Largest s in [0, top] with powers[s] containing `target`; powers[0] is
// the unit ideal so the search always succeeds.
std::uint64_t largest_power_containing(const std::vector<MonomialIdeal>& powers,
                                       const MonomialIdeal& target,
                                       std::uint64_t top) {
  for (std::uint64_t s = top + 1; s-- > 0;)
    if (ideal_contains(powers[s], target)) return s;
  throw InternalInconsistency("unit ideal failed to contain an ideal");
}

}  // namespace

UniformExponentReport uniform_exponents(const MonomialIdeal& j,
                                        std::uint64_t n_max,
                                        const Limits& limits) {
  require_proper_nonzero(j);
  if (n_max == 0) throw PreconditionError("n_max must be at least 1");

  UniformExponentReport report{j, n_max, {}, 0, 0};
  std::vector<MonomialIdeal> powers{MonomialIdeal::unit(j.dim())};
  const MonomialIdeal bar = [&] {
    try {
      return closure(j, limits);
    } catch (const CapExceeded& e) {
      throw CapExceeded("closure of J", e);
    }
  }();
  MonomialIdeal bar_power = MonomialIdeal::unit(j.dim());

  for (std::uint64_t n = 1; n <= n_max; ++n) {
    try {
      while (powers.size() <= n + 1)
        powers.push_back(ideal_product(powers.back(), j, limits));
      bar_power = ideal_product(bar_power, bar, limits);
      const MonomialIdeal closure_of_power = closure(powers[n], limits);

      if (ideal_contains(powers[n + 1], bar_power))
        throw InternalInconsistency("closure(J)^" + std::to_string(n) +
                                    " lies in J^" + std::to_string(n + 1));
      ExponentRow row{n, largest_power_containing(powers, bar_power, n),
                      largest_power_containing(powers, closure_of_power, n)};
      if (row.s_closure > row.s_bar)
        throw InternalInconsistency("s_closure exceeds s_bar at n = " +
                                    std::to_string(n));
      report.k_bar = std::max(report.k_bar, n - row.s_bar);
      report.k_cl = std::max(report.k_cl, n - row.s_closure);
      report.rows.push_back(row);
    } catch (const CapExceeded& e) {
      throw CapExceeded("n = " + std::to_string(n), e);
    }
  }
  return report;
}

WitnessPair witness_pair(std::size_t d) {
  if (d < 2) throw PreconditionError("witness pair needs d >= 2");
  const mpz_class dd = static_cast<unsigned long>(d);
  std::vector<ExponentVector> jg, ig;
  for (std::size_t i = 0; i < d; ++i) {
    jg.push_back(ExponentVector::unit(d, i, dd));
    ig.push_back(jg.back());
  }
  for (std::size_t i = 0; i + 1 < d; ++i) {
    ExponentVector e = ExponentVector::unit(d, i, dd - 1) +
                       ExponentVector::unit(d, d - 1, 1);
    ig.push_back(std::move(e));
  }
  return WitnessPair{d, MonomialIdeal(d, jg), MonomialIdeal(d, ig)};
}

WitnessVerdict verify_witness(std::size_t d, const Limits& limits) {
  const WitnessPair w = witness_pair(d);
  const mpz_class dd = static_cast<unsigned long>(d);
  WitnessVerdict v;
  v.d = d;
  v.integral = is_integral_ideal(w.j, w.i, limits).is_yes();

  ExponentVector product(d);
  for (std::size_t i = 0; i + 1 < d; ++i)
    product = product + ExponentVector::unit(d, i, dd - 1) +
              ExponentVector::unit(d, d - 1, 1);
  ExponentVector diagonal(std::vector<mpz_class>(d, dd - 1));
  v.product_is_diagonal = product == diagonal;
  v.product_outside_j = !contains_monomial(w.j, product);
  v.power_not_in_j = !ideal_contains(w.j, ideal_power(w.i, d - 1, limits));

  for (std::size_t i = 0; i + 1 < d; ++i) {
    const ExponentVector xi = ExponentVector::unit(d, i, dd);
    const ExponentVector xd = ExponentVector::unit(d, d - 1, dd);
    const ExponentVector mixed = ExponentVector::unit(d, i, dd - 1) +
                                 ExponentVector::unit(d, d - 1, 1);
    const MonomialIdeal small(d, {xi, xd});
    const MonomialIdeal big(d, {xi, mixed, xd});
    const auto outcome = reduction_number(small, big, d, limits);
    if (const auto* w2 = std::get_if<ReductionWitness>(&outcome))
      v.pairwise_reduction_numbers.push_back(w2->k);
  }
  return v;
}

bool LipmanSathayeReport::holds() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ContainmentRow& r) { return r.holds; });
}

LipmanSathayeReport lipman_sathaye_check(const MonomialIdeal& j,
                                         std::uint64_t n_max,
                                         const Limits& limits) {
  require_proper_nonzero(j);
  const std::uint64_t shift = j.dim() - 1;
  LipmanSathayeReport report;
  for (std::uint64_t n = std::max<std::uint64_t>(shift, 1); n <= n_max; ++n) {
    const MonomialIdeal cl = closure(ideal_power(j, n, limits), limits);
    report.rows.push_back(
        ContainmentRow{n, ideal_contains(ideal_power(j, n - shift, limits), cl)});
  }
  return report;
}

bool ChainReport::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const ChainRow& r) {
    return r.power_in_closure_power && r.closure_power_in_closure_of_power;
  });
}

ChainReport chain_check(const MonomialIdeal& j, std::uint64_t n_max,
                        const Limits& limits) {
  ChainReport report;
  const MonomialIdeal bar = closure(j, limits);
  MonomialIdeal power = MonomialIdeal::unit(j.dim());
  MonomialIdeal bar_power = power;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    power = ideal_product(power, j, limits);
    bar_power = ideal_product(bar_power, bar, limits);
    const MonomialIdeal closure_of_power = closure(power, limits);
    report.rows.push_back(ChainRow{n, ideal_contains(bar_power, power),
                                   ideal_contains(closure_of_power, bar_power)});
  }
  return report;
}

mpz_class nilpotent_lift_bound(const mpz_class& k,
                               std::span<const mpz_class> artin_rees) {
  if (sgn(k) < 0) throw PreconditionError("k must be nonnegative");
  mpz_class total = k * static_cast<unsigned long>(artin_rees.size() + 1);
  for (const auto& c : artin_rees) {
    if (sgn(c) < 0) throw PreconditionError("Artin-Rees constants must be nonnegative");
    total += c;
  }
  return total;
}

IdealSampler::IdealSampler(std::uint64_t seed, SamplerConfig config)
    : seed_(seed), config_(std::move(config)), engine_(seed) {
  if (config_.dims.empty() || config_.min_generators == 0 ||
      config_.min_generators > config_.max_generators ||
      config_.max_exponent == 0)
    throw PreconditionError("invalid sampler configuration");
}

std::uint64_t IdealSampler::uniform(std::uint64_t lo, std::uint64_t hi) {
  // Rejection sampling on the raw engine output; std distributions are not
  // reproducible across standard libraries.
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return engine_();
  const std::uint64_t limit = engine_.max() - engine_.max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + x % span;
}

ExponentVector IdealSampler::random_monomial(std::size_t dim,
                                             std::uint64_t max_exponent) {
  std::vector<mpz_class> coords;
  for (std::size_t i = 0; i < dim; ++i)
    coords.emplace_back(static_cast<unsigned long>(uniform(0, max_exponent)));
  return ExponentVector(std::move(coords));
}

MonomialIdeal IdealSampler::next() {
  for (;;) {
    const std::size_t d = config_.dims[uniform(0, config_.dims.size() - 1)];
    const std::size_t count =
        uniform(config_.min_generators, config_.max_generators);
    std::vector<ExponentVector> gens;
    for (std::size_t k = 0; k < count; ++k)
      gens.push_back(random_monomial(d, config_.max_exponent));
    MonomialIdeal ideal(d, gens);
    if (!ideal.is_zero() && !ideal.is_unit()) return ideal;
  }
}

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(trials.begin(), trials.end(),
                    [](const TrialRecord& t) { return !t.passed(); }));
}

SuiteResult run_sample_suite(std::size_t trials, std::uint64_t seed,
                             std::uint64_t n_max, std::uint64_t k_max,
                             const Limits& limits) {
  SamplerConfig config;
  config.max_generators = 4;
  config.max_exponent = 5;
  IdealSampler sampler(seed, config);
  SuiteResult result{seed, n_max, k_max, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    MonomialIdeal j = sampler.next();
    const std::size_t d = j.dim();
    const MonomialIdeal extra(d, {sampler.random_monomial(d, config.max_exponent)});
    MonomialIdeal i = ideal_sum(j, extra, limits);
    UniformExponentReport report = uniform_exponents(j, n_max, limits);
    const bool bounds = report.k_bar <= report.k_cl && report.k_cl <= d - 1;
    const bool chain = chain_check(j, n_max, limits).holds();
    const bool ls = lipman_sathaye_check(j, n_max, limits).holds();
    const bool integral = is_integral_ideal(j, i, limits).is_yes();
    const auto outcome = reduction_number(j, i, k_max, limits);
    std::optional<std::uint64_t> k;
    if (const auto* w = std::get_if<ReductionWitness>(&outcome)) k = w->k;
    result.trials.push_back(TrialRecord{t, std::move(j), std::move(report),
                                        chain, ls, bounds, std::move(i),
                                        integral, k, integral == k.has_value()});
  }
  return result;
}

}  // namespace closure_lab
