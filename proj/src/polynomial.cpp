#include "closure_lab/polynomial.hpp"

#include "closure_lab/error.hpp"

namespace closure_lab {

Polynomial::Polynomial(std::size_t dim) : dim_(dim) {}

Polynomial Polynomial::constant(std::size_t dim, const mpq_class& c) {
  Polynomial p(dim);
  p.add_term(ExponentVector(dim), c);
  return p;
}

Polynomial Polynomial::monomial(const ExponentVector& e, const mpq_class& c) {
  Polynomial p(e.dim());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t index) {
  return monomial(ExponentVector::unit(dim, index));
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

mpq_class Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

Term Polynomial::leading_term(TermOrder order) const {
  if (terms_.empty())
    throw PreconditionError("zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (compare(order, it->first, best->first) > 0) best = it;
  return Term{best->first, best->second};
}

void Polynomial::add_term(const ExponentVector& e, const mpq_class& c) {
  require_same_dim(dim_, e.dim());
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) {
    it->second.canonicalize();  // callers may pass an unreduced n/d
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_dim(dim_, other.dim_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_dim(dim_, other.dim_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_dim(a.dim_, b.dim_);
  Polynomial r(a.dim_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Polynomial operator*(const mpq_class& c, const Polynomial& p) {
  Polynomial r(p.dim_);
  if (sgn(c) == 0) return r;
  for (const auto& [e, k] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * k);
  return r;
}

Polynomial Polynomial::times_term(const ExponentVector& e,
                                  const mpq_class& c) const {
  require_same_dim(dim_, e.dim());
  Polynomial r(dim_);
  if (sgn(c) == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k + e, v * c);
  return r;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(dim_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace closure_lab
