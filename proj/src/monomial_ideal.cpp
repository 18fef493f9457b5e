#include "closure_lab/monomial_ideal.hpp"

#include <algorithm>

#include "closure_lab/error.hpp"

namespace closure_lab {

MonomialIdeal::MonomialIdeal(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw PreconditionError("ambient dimension must be positive");
}

MonomialIdeal::MonomialIdeal(std::size_t dim,
                             std::span<const ExponentVector> generators)
    : MonomialIdeal(minimalize(dim, generators, Limits{})) {}

MonomialIdeal::MonomialIdeal(std::size_t dim,
                             std::initializer_list<ExponentVector> gens)
    : MonomialIdeal(dim, std::span<const ExponentVector>(gens.begin(),
                                                         gens.size())) {}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) {
  const ExponentVector one(dim);
  return MonomialIdeal(dim, std::span<const ExponentVector>(&one, 1));
}

MonomialIdeal minimalize(std::size_t dim, std::span<const ExponentVector> gens,
                         const Limits& limits) {
  if (dim == 0) throw PreconditionError("ambient dimension must be positive");
  for (const auto& g : gens) require_same_dim(dim, g.dim());

  // A divisor has total degree no larger than its multiple, so scanning in
  // degree order lets each candidate be tested against the survivors only.
  std::vector<std::pair<mpz_class, const ExponentVector*>> order;
  order.reserve(gens.size());
  for (const auto& g : gens) order.emplace_back(g.total_degree(), &g);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    int c = cmp(a.first, b.first);
    if (c != 0) return c < 0;
    return *a.second < *b.second;
  });

  std::vector<ExponentVector> kept;
  for (const auto& [deg, g] : order) {
    if (!kept.empty() && kept.back() == *g) continue;
    bool divisible = std::any_of(kept.begin(), kept.end(),
                                 [&](const ExponentVector& k) {
                                   return k.divides(*g);
                                 });
    if (!divisible) {
      kept.push_back(*g);
      if (kept.size() > limits.generator_cap)
        throw CapExceeded("minimal generator count", limits.generator_cap);
    }
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(MonomialIdeal::Minimal{}, dim, std::move(kept));
}

bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& m) {
  require_same_dim(ideal.dim(), m.dim());
  const auto& gens = ideal.generators();
  return std::any_of(gens.begin(), gens.end(),
                     [&](const ExponentVector& g) { return g.divides(m); });
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b,
                        const Limits& limits) {
  require_same_dim(a.dim(), b.dim());
  std::vector<ExponentVector> all = a.generators();
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.dim(), all, limits);
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b,
                            const Limits& limits) {
  require_same_dim(a.dim(), b.dim());
  std::vector<ExponentVector> all;
  all.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) all.push_back(g + h);
  return minimalize(a.dim(), all, limits);
}

MonomialIdeal ideal_power(const MonomialIdeal& a, std::uint64_t n,
                          const Limits& limits) {
  MonomialIdeal result = MonomialIdeal::unit(a.dim());
  MonomialIdeal base = a;
  while (n > 0) {
    if (n & 1) result = ideal_product(result, base, limits);
    n >>= 1;
    if (n > 0) base = ideal_product(base, base, limits);
  }
  return result;
}

bool ideal_contains(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const ExponentVector& g) {
                       return contains_monomial(a, g);
                     });
}

}  // namespace closure_lab
