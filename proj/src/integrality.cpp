#include "closure_lab/integrality.hpp"

#include <algorithm>
#include <optional>

#include "closure_lab/determinant.hpp"
#include "closure_lab/error.hpp"
#include "closure_lab/newton_polyhedron.hpp"

namespace closure_lab {

namespace {

std::optional<MonomialIdeal> as_monomial(const PolyIdeal& ideal) {
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_term()) return std::nullopt;
    gens.push_back(g.terms().begin()->first);
  }
  return MonomialIdeal(ideal.dim(), gens);
}

bool is_unit_ideal(const PolyIdeal& ideal, TermOrder order,
                   const Limits& limits) {
  const Polynomial one = Polynomial::constant(ideal.dim(), 1);
  return poly_ideal_member(one, ideal, order, limits).member;
}

PolyIdeal principal(const Polynomial& f) {
  return PolyIdeal(f.dim(), {f});
}

}  // namespace

std::string_view to_string(TriState t) {
  switch (t.value()) {
    case TriState::Value::Yes: return "Yes";
    case TriState::Value::No: return "No";
    case TriState::Value::Unknown: return "Unknown";
  }
  return "Unknown";
}

ReductionOutcome reduction_number(const MonomialIdeal& j, const MonomialIdeal& i,
                                  std::uint64_t k_max, const Limits& limits) {
  require_same_dim(j.dim(), i.dim());
  if (!ideal_contains(i, j))
    throw PreconditionError("reduction_number requires J to be contained in I");
  MonomialIdeal power = MonomialIdeal::unit(i.dim());
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    MonomialIdeal next = ideal_product(i, power, limits);
    if (next == ideal_product(j, power, limits))
      return ReductionWitness{k, true};
    power = std::move(next);
  }
  return NotUpTo{k_max};
}

ReductionOutcome reduction_number(const PolyIdeal& j, const PolyIdeal& i,
                                  std::uint64_t k_max, TermOrder order,
                                  const Limits& limits) {
  require_same_dim(j.dim(), i.dim());
  const PolyIdeal i_gb = buchberger(i, order, limits);
  for (const auto& g : j.generators())
    if (!poly_ideal_member(g, i_gb, order, limits).member)
      throw PreconditionError("reduction_number requires J to be contained in I");

  // I^k is carried by its reduced basis to keep generator lists short.
  PolyIdeal power(i.dim(), {Polynomial::constant(i.dim(), 1)});
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const PolyIdeal next =
        buchberger(poly_ideal_product(i, power, limits), order, limits);
    const PolyIdeal rhs = poly_ideal_product(j, power, limits);
    if (poly_ideal_equal(next, rhs, order, limits))
      return ReductionWitness{k, true};
    power = PolyIdeal(i.dim(), next.cached_basis(order)->basis);
  }
  return NotUpTo{k_max};
}

TriState is_integral_ideal(const MonomialIdeal& j, const MonomialIdeal& i,
                           const Limits& limits) {
  require_same_dim(j.dim(), i.dim());
  if (i.is_zero()) return TriState::yes();
  if (j.is_zero()) return TriState::no();
  return ideal_contains(closure(j, limits), i) ? TriState::yes()
                                               : TriState::no();
}

TriState is_integral_ideal(const PolyIdeal& j, const PolyIdeal& i,
                           std::uint64_t k_max, TermOrder order,
                           const Limits& limits) {
  require_same_dim(j.dim(), i.dim());
  const auto mj = as_monomial(j);
  const auto mi = as_monomial(i);
  if (mj && mi) return is_integral_ideal(*mj, *mi, limits);
  if (is_unit_ideal(j, order, limits)) return TriState::yes();
  const auto outcome =
      reduction_number(j, poly_ideal_sum(j, i, limits), k_max, order, limits);
  return std::holds_alternative<ReductionWitness>(outcome)
             ? TriState::yes()
             : TriState::unknown(k_max);
}

TriState is_integral_element(const Polynomial& f, const MonomialIdeal& j,
                             std::uint64_t k_max, TermOrder order,
                             const Limits& limits) {
  require_same_dim(j.dim(), f.dim());
  if (f.is_zero()) throw PreconditionError("element must be nonzero");
  if (j.is_unit()) return TriState::yes();
  if (f.is_term()) {
    if (j.is_zero()) return TriState::no();
    return closure_member(j, f.terms().begin()->first) ? TriState::yes()
                                                      : TriState::no();
  }
  return is_integral_element(f, to_poly_ideal(j), k_max, order, limits);
}

TriState is_integral_element(const Polynomial& f, const PolyIdeal& j,
                             std::uint64_t k_max, TermOrder order,
                             const Limits& limits) {
  require_same_dim(j.dim(), f.dim());
  if (f.is_zero()) throw PreconditionError("element must be nonzero");
  if (f.is_term()) {
    if (auto mj = as_monomial(j))
      return is_integral_element(f, *mj, k_max, order, limits);
  }
  if (is_unit_ideal(j, order, limits)) return TriState::yes();
  const auto outcome = reduction_number(
      j, poly_ideal_sum(j, principal(f), limits), k_max, order, limits);
  return std::holds_alternative<ReductionWitness>(outcome)
             ? TriState::yes()
             : TriState::unknown(k_max);
}

namespace {

Polynomial power_product(std::span<const Polynomial> gens,
                         std::span<const std::uint64_t> multiplicity,
                         std::size_t dim) {
  Polynomial p = Polynomial::constant(dim, 1);
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (multiplicity[k] > 0) p = p * gens[k].pow(multiplicity[k]);
  return p;
}

}  // namespace

bool verify_certificate(const IntegralityCertificate& cert,
                        std::span<const Polynomial> ideal_generators) {
  const std::size_t d = cert.element.dim();
  const std::uint64_t n = cert.degree;
  if (n == 0 || cert.coefficients.size() != n || cert.memberships.size() != n)
    return false;
  for (const auto& g : ideal_generators)
    if (g.dim() != d) return false;

  for (std::uint64_t i = 1; i <= n; ++i) {
    const auto& proof = cert.memberships[i - 1];
    if (proof.power != i) return false;
    Polynomial sum(d);
    for (const auto& term : proof.terms) {
      if (term.multiplicity.size() != ideal_generators.size()) return false;
      std::uint64_t total = 0;
      for (auto m : term.multiplicity) total += m;
      if (total != i || term.quotient.dim() != d) return false;
      sum += term.quotient *
             power_product(ideal_generators, term.multiplicity, d);
    }
    if (sum != cert.coefficients[i - 1]) return false;
  }

  // Horner evaluation of t^n + a_1 t^{n-1} + ... + a_n at t = element.
  Polynomial value = Polynomial::constant(d, 1);
  for (std::uint64_t i = 0; i < n; ++i)
    value = value * cert.element + cert.coefficients[i];
  return value.is_zero();
}

IntegralityCertificate monomial_certificate(const ExponentVector& m,
                                            const MonomialIdeal& j) {
  require_same_dim(j.dim(), m.dim());
  if (j.is_zero()) throw PreconditionError("monomial_certificate needs a nonzero ideal");
  const NewtonPolyhedron poly(j);
  const NpMembership res = np_member(poly, m);
  if (!res.member)
    throw PreconditionError("monomial is not integral over the ideal");
  const auto& lambdas = res.certificate->lambdas;
  const mpz_class lcm = res.certificate->denominator_lcm();
  if (!lcm.fits_ulong_p())
    throw CapExceeded("certificate degree", ~std::size_t{0});
  const std::uint64_t n = lcm.get_ui();
  const std::size_t d = j.dim();

  // m^n = prod g_i^{n lambda_i} * x^slack with slack >= 0.
  std::vector<std::uint64_t> multiplicity;
  ExponentVector covered(d);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const mpq_class scaled = lambdas[i] * lcm;
    const std::uint64_t e = scaled.get_num().get_ui();
    multiplicity.push_back(e);
    covered = covered + j.generators()[i].scaled(e);
  }
  const ExponentVector target = m.scaled(lcm);
  const ExponentVector slack = target - covered;

  IntegralityCertificate cert{Polynomial::monomial(m), n, {}, {}};
  for (std::uint64_t i = 1; i <= n; ++i) {
    MembershipProof proof{i, {}};
    if (i < n) {
      cert.coefficients.emplace_back(d);
    } else {
      cert.coefficients.push_back(Polynomial::monomial(target, -1));
      proof.terms.push_back(
          PowerProductTerm{multiplicity, Polynomial::monomial(slack, -1)});
    }
    cert.memberships.push_back(std::move(proof));
  }
  const PolyIdeal gens = to_poly_ideal(j);
  if (!verify_certificate(cert, gens.generators()))
    throw InternalInconsistency("monomial certificate failed to verify");
  return cert;
}

namespace {

// Embeds p into Q[x_1..x_d, t] with t absent.
Polynomial with_extra_variable(const Polynomial& p) {
  Polynomial out(p.dim() + 1);
  for (const auto& [e, c] : p.terms()) {
    std::vector<mpz_class> coords(e.coords().begin(), e.coords().end());
    coords.emplace_back(0);
    out.add_term(ExponentVector(std::move(coords)), c);
  }
  return out;
}

// Coefficients of t^0, t^1, ... of a polynomial in Q[x_1..x_d, t].
std::vector<Polynomial> split_extra_variable(const Polynomial& p,
                                             std::size_t degree) {
  const std::size_t d = p.dim() - 1;
  std::vector<Polynomial> out(degree + 1, Polynomial(d));
  for (const auto& [e, c] : p.terms()) {
    const mpz_class& tdeg = e[d];
    if (tdeg > degree) throw InternalInconsistency("determinant degree in t");
    std::vector<mpz_class> coords(e.coords().begin(), e.coords().end() - 1);
    out[tdeg.get_ui()].add_term(ExponentVector(std::move(coords)), c);
  }
  return out;
}

// All multisets of size n over s generators, with their products.
void power_products(std::span<const Polynomial> gens, std::uint64_t n,
                    std::vector<std::vector<std::uint64_t>>& labels,
                    std::vector<Polynomial>& products, const Limits& limits) {
  const std::size_t s = gens.size();
  const std::size_t d = gens.front().dim();
  std::vector<std::uint64_t> mult(s, 0);
  // Enumerate compositions of n into s parts in lexicographic order.
  auto rec = [&](auto&& self, std::size_t k, std::uint64_t left) -> void {
    if (k + 1 == s) {
      mult[k] = left;
      if (products.size() >= limits.generator_cap)
        throw CapExceeded("generator count", limits.generator_cap);
      labels.push_back(mult);
      products.push_back(power_product(gens, mult, d));
      return;
    }
    for (std::uint64_t e = left + 1; e-- > 0;) {
      mult[k] = e;
      self(self, k + 1, left - e);
    }
  };
  rec(rec, 0, n);
}

}  // namespace

IntegralityCertificate cramer_certificate(const Polynomial& f,
                                          const PolyIdeal& j,
                                          const PolyIdeal& i, std::uint64_t k,
                                          TermOrder order, const Limits& limits,
                                          std::size_t determinant_cap) {
  const std::size_t d = f.dim();
  require_same_dim(j.dim(), d);
  require_same_dim(i.dim(), d);
  if (j.size() == 0) throw PreconditionError("cramer_certificate needs a nonzero J");
  if (!poly_ideal_member(f, i, order, limits).member)
    throw PreconditionError("element is not in I");

  const PolyIdeal ik = buchberger(poly_ideal_power(i, k, limits), order, limits);
  const std::vector<Polynomial> g = ik.cached_basis(order)->basis;
  if (!poly_ideal_equal(poly_ideal_product(i, PolyIdeal(d, g), limits),
                        poly_ideal_product(j, PolyIdeal(d, g), limits), order,
                        limits))
    throw PreconditionError("I^{k+1} = J I^k does not hold for the given k");
  const std::size_t n = g.size();
  if (n > determinant_cap) throw CapExceeded("determinant size", determinant_cap);

  // J I^k with generator J_p * g_q at index p * n + q.
  const PolyIdeal jik = buchberger(poly_ideal_product(j, PolyIdeal(d, g), limits),
                                   order, limits);
  PolyMatrix matrix(n, std::vector<Polynomial>(n, Polynomial(d + 1)));
  const Polynomial t = Polynomial::variable(d + 1, d);
  for (std::size_t r = 0; r < n; ++r) {
    const Polynomial target = f * g[r];
    const MembershipResult lift = poly_ideal_member(target, jik, order, limits);
    if (!lift.member) throw InternalInconsistency("lift of f*g outside J I^k");
    Polynomial check(d);
    for (std::size_t q = 0; q < n; ++q) {
      Polynomial h(d);
      for (std::size_t p = 0; p < j.size(); ++p)
        h += lift.generator_quotients[p * n + q] * j.generators()[p];
      check += h * g[q];
      matrix[r][q] = -with_extra_variable(h);
      if (r == q) matrix[r][q] += t;
    }
    if (check != target) throw InternalInconsistency("lift does not re-evaluate");
  }

  const Polynomial det = n <= 6 ? determinant_cofactor(matrix)
                                : determinant_bareiss(std::move(matrix));
  const std::vector<Polynomial> by_t = split_extra_variable(det, n);
  if (by_t[n] != Polynomial::constant(d, 1))
    throw InternalInconsistency("characteristic determinant is not monic");

  IntegralityCertificate cert{f, n, {}, {}};
  for (std::uint64_t deg = 1; deg <= n; ++deg) {
    const Polynomial& c = by_t[n - deg];
    MembershipProof proof{deg, {}};
    if (!c.is_zero()) {
      std::vector<std::vector<std::uint64_t>> labels;
      std::vector<Polynomial> products;
      power_products(j.generators(), deg, labels, products, limits);
      const MembershipResult mem =
          poly_ideal_member(c, PolyIdeal(d, products), order, limits);
      if (!mem.member)
        throw InternalInconsistency("determinant coefficient outside J^i");
      for (std::size_t q = 0; q < products.size(); ++q)
        if (!mem.generator_quotients[q].is_zero())
          proof.terms.push_back(
              PowerProductTerm{labels[q], mem.generator_quotients[q]});
    }
    cert.coefficients.push_back(c);
    cert.memberships.push_back(std::move(proof));
  }
  if (!verify_certificate(cert, j.generators()))
    throw InternalInconsistency("determinant certificate failed to verify");
  return cert;
}

}  // namespace closure_lab
