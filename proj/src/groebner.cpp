#include "closure_lab/groebner.hpp"

#include <algorithm>
#include <set>

#include "closure_lab/error.hpp"

namespace closure_lab {

DivisionResult normal_form(const Polynomial& f,
                           std::span<const Polynomial> divisors,
                           TermOrder order) {
  const std::size_t d = f.dim();
  std::vector<Term> leads;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) {
    require_same_dim(d, g.dim());
    if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
    leads.push_back(g.leading_term(order));
  }

  DivisionResult out{Polynomial(d),
                     std::vector<Polynomial>(divisors.size(), Polynomial(d))};
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term(order);
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i].exponent.divides(lt.exponent)) continue;
      const ExponentVector shift = lt.exponent - leads[i].exponent;
      const mpq_class c = lt.coefficient / leads[i].coefficient;
      out.quotients[i].add_term(shift, c);
      p -= divisors[i].times_term(shift, c);
      divided = true;
      break;
    }
    if (!divided) {
      out.remainder.add_term(lt.exponent, lt.coefficient);
      p.add_term(lt.exponent, -lt.coefficient);
    }
  }
  return out;
}

PolyIdeal::PolyIdeal(std::size_t dim, std::vector<Polynomial> generators)
    : dim_(dim), gens_(std::move(generators)) {
  if (dim == 0) throw PreconditionError("ambient dimension must be positive");
  for (const auto& g : gens_) {
    require_same_dim(dim_, g.dim());
    if (g.is_zero()) throw PreconditionError("zero generator");
  }
}

const GroebnerBasis* PolyIdeal::cached_basis(TermOrder order) const {
  return gb_ && gb_->order == order ? gb_.get() : nullptr;
}

PolyIdeal to_poly_ideal(const MonomialIdeal& ideal) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators())
    gens.push_back(Polynomial::monomial(g));
  return PolyIdeal(ideal.dim(), std::move(gens));
}

namespace {

struct Element {
  Polynomial poly;
  Term lead;
  std::vector<Polynomial> cofactor;
};

using Row = std::vector<Polynomial>;

void axpy(Row& target, const Polynomial& scale, const Row& source) {
  if (scale.is_zero()) return;
  for (std::size_t j = 0; j < target.size(); ++j)
    if (!source[j].is_zero()) target[j] += scale * source[j];
}

Row scaled_row(const Row& row, const ExponentVector& e, const mpq_class& c) {
  Row out;
  out.reserve(row.size());
  for (const auto& p : row) out.push_back(p.times_term(e, c));
  return out;
}

// Reduces `poly` (with cofactor row `cof`) against `basis`, skipping index
// `skip`, and returns the remainder with its updated row.
std::pair<Polynomial, Row> reduce_tracked(const Polynomial& poly, Row cof,
                                          const std::vector<Element>& basis,
                                          std::size_t skip, TermOrder order) {
  std::vector<Polynomial> divisors;
  std::vector<std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i == skip) continue;
    divisors.push_back(basis[i].poly);
    index.push_back(i);
  }
  if (divisors.empty()) return {poly, std::move(cof)};
  DivisionResult div = normal_form(poly, divisors, order);
  for (std::size_t k = 0; k < divisors.size(); ++k)
    axpy(cof, -div.quotients[k], basis[index[k]].cofactor);
  return {std::move(div.remainder), std::move(cof)};
}

struct Pair {
  std::size_t i, j;
  ExponentVector lcm;
};

}  // namespace

PolyIdeal buchberger(const PolyIdeal& ideal, TermOrder order,
                     const Limits& limits) {
  const std::size_t d = ideal.dim();
  const std::size_t ngens = ideal.size();
  std::vector<Element> basis;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  std::size_t pairs_created = 0;

  auto add_element = [&](Polynomial poly, Row cof) {
    const std::size_t n = basis.size();
    basis.push_back(Element{std::move(poly), {}, std::move(cof)});
    basis.back().lead = basis.back().poly.leading_term(order);
    for (std::size_t i = 0; i < n; ++i) {
      if (++pairs_created > limits.spair_cap)
        throw CapExceeded("S-pair count", limits.spair_cap);
      pending.push_back(
          Pair{i, n, basis[i].lead.exponent.lcm(basis[n].lead.exponent)});
      pending_keys.emplace(i, n);
    }
  };

  for (std::size_t j = 0; j < ngens; ++j) {
    Row cof(ngens, Polynomial(d));
    cof[j] = Polynomial::constant(d, 1);
    add_element(ideal.generators()[j], std::move(cof));
  }

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_keys.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto it = std::min_element(pending.begin(), pending.end(),
                               [&](const Pair& a, const Pair& b) {
                                 auto c = compare(order, a.lcm, b.lcm);
                                 if (c != 0) return c < 0;
                                 return std::tie(a.i, a.j) < std::tie(b.i, b.j);
                               });
    const Pair pair = *it;
    pending.erase(it);
    pending_keys.erase({pair.i, pair.j});

    const Element& f = basis[pair.i];
    const Element& g = basis[pair.j];
    if (f.lead.exponent.coprime(g.lead.exponent)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = basis[k].lead.exponent.divides(pair.lcm) &&
              !is_pending(pair.i, k) && !is_pending(pair.j, k);
    }
    if (chain) continue;

    const ExponentVector sf = pair.lcm - f.lead.exponent;
    const ExponentVector sg = pair.lcm - g.lead.exponent;
    const mpq_class cf = 1 / f.lead.coefficient;
    const mpq_class cg = -1 / g.lead.coefficient;
    Polynomial s = f.poly.times_term(sf, cf) + g.poly.times_term(sg, cg);
    Row cof = scaled_row(f.cofactor, sf, cf);
    const Row gcof = scaled_row(g.cofactor, sg, cg);
    for (std::size_t j = 0; j < ngens; ++j) cof[j] += gcof[j];

    auto [h, hcof] =
        reduce_tracked(s, std::move(cof), basis, basis.size(), order);
    if (!h.is_zero()) add_element(std::move(h), std::move(hcof));
  }

  // Minimal basis: drop elements whose leading term is divisible by another
  // survivor's. Among equal leading terms keep the earliest.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t k = 0; k < basis.size() && keep[i]; ++k) {
      if (k == i) continue;
      const auto& a = basis[k].lead.exponent;
      const auto& b = basis[i].lead.exponent;
      keep[i] = !(a.divides(b) && (a != b || k < i));
    }
  }
  std::vector<Element> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // Tail-reduce each element against the others, then normalize.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    auto [h, hcof] = reduce_tracked(minimal[i].poly, minimal[i].cofactor,
                                    minimal, i, order);
    minimal[i].poly = std::move(h);
    minimal[i].cofactor = std::move(hcof);
  }
  for (auto& e : minimal) {
    e.lead = e.poly.leading_term(order);
    const mpq_class inv = 1 / e.lead.coefficient;
    e.poly = inv * e.poly;
    for (auto& c : e.cofactor) c = inv * c;
    e.lead.coefficient = 1;
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Element& a, const Element& b) {
              return compare(order, a.lead.exponent, b.lead.exponent) > 0;
            });

  auto gb = std::make_shared<GroebnerBasis>();
  gb->order = order;
  for (auto& e : minimal) {
    gb->basis.push_back(std::move(e.poly));
    gb->cofactors.push_back(std::move(e.cofactor));
  }
  PolyIdeal out = ideal;
  out.gb_ = std::move(gb);
  return out;
}

GroebnerBasis groebner_basis(const PolyIdeal& ideal, TermOrder order,
                             const Limits& limits) {
  if (const auto* gb = ideal.cached_basis(order)) return *gb;
  return *buchberger(ideal, order, limits).cached_basis(order);
}

bool cofactors_hold(const PolyIdeal& ideal, const GroebnerBasis& gb) {
  if (gb.cofactors.size() != gb.basis.size()) return false;
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    if (gb.cofactors[i].size() != ideal.size()) return false;
    Polynomial sum(ideal.dim());
    for (std::size_t j = 0; j < ideal.size(); ++j)
      sum += gb.cofactors[i][j] * ideal.generators()[j];
    if (sum != gb.basis[i]) return false;
  }
  return true;
}

MembershipResult poly_ideal_member(const Polynomial& f, const PolyIdeal& ideal,
                                   TermOrder order, const Limits& limits) {
  require_same_dim(ideal.dim(), f.dim());
  const std::size_t d = ideal.dim();
  MembershipResult out;
  if (f.is_zero()) {
    out.member = true;
    out.generator_quotients.assign(ideal.size(), Polynomial(d));
    if (const auto* gb = ideal.cached_basis(order))
      out.basis_quotients.assign(gb->basis.size(), Polynomial(d));
    return out;
  }
  const GroebnerBasis gb = groebner_basis(ideal, order, limits);
  if (gb.basis.empty()) return out;
  DivisionResult div = normal_form(f, gb.basis, order);
  if (!div.remainder.is_zero()) return out;
  out.member = true;
  out.generator_quotients.assign(ideal.size(), Polynomial(d));
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    axpy(out.generator_quotients, div.quotients[i], gb.cofactors[i]);
  out.basis_quotients = std::move(div.quotients);
  return out;
}

bool poly_ideal_equal(const PolyIdeal& a, const PolyIdeal& b, TermOrder order,
                      const Limits& limits) {
  require_same_dim(a.dim(), b.dim());
  return groebner_basis(a, order, limits).basis ==
         groebner_basis(b, order, limits).basis;
}

namespace {

void check_cap(std::size_t count, const Limits& limits) {
  if (count > limits.generator_cap)
    throw CapExceeded("generator count", limits.generator_cap);
}

}  // namespace

PolyIdeal poly_ideal_sum(const PolyIdeal& a, const PolyIdeal& b,
                         const Limits& limits) {
  require_same_dim(a.dim(), b.dim());
  check_cap(a.size() + b.size(), limits);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PolyIdeal(a.dim(), std::move(gens));
}

PolyIdeal poly_ideal_product(const PolyIdeal& a, const PolyIdeal& b,
                             const Limits& limits) {
  require_same_dim(a.dim(), b.dim());
  check_cap(a.size() * b.size(), limits);
  std::vector<Polynomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return PolyIdeal(a.dim(), std::move(gens));
}

PolyIdeal poly_ideal_power(const PolyIdeal& a, std::uint64_t n,
                           const Limits& limits) {
  const std::size_t d = a.dim();
  if (n == 0) return PolyIdeal(d, {Polynomial::constant(d, 1)});
  if (a.size() == 0) return a;
  // One generator per multiset of n generator indices.
  std::vector<Polynomial> gens;
  std::vector<std::size_t> idx(n, 0);
  const std::size_t s = a.size();
  for (;;) {
    check_cap(gens.size() + 1, limits);
    Polynomial p = a.generators()[idx[0]];
    for (std::size_t k = 1; k < n; ++k) p = p * a.generators()[idx[k]];
    gens.push_back(std::move(p));
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == s - 1) --k;
    if (k == 0) break;
    const std::size_t next = idx[k - 1] + 1;
    for (std::size_t m = k - 1; m < n; ++m) idx[m] = next;
  }
  return PolyIdeal(d, std::move(gens));
}

}  // namespace closure_lab
