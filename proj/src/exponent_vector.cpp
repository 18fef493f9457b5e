#include "closure_lab/exponent_vector.hpp"

#include <algorithm>

#include "closure_lab/error.hpp"

namespace closure_lab {

void require_same_dim(std::size_t expected, std::size_t got) {
  if (expected != got) throw DimensionMismatch(expected, got);
}

ExponentVector::ExponentVector(std::size_t dim) : coords_(dim) {}

ExponentVector::ExponentVector(std::vector<mpz_class> coords)
    : coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (sgn(c) < 0) throw PreconditionError("negative exponent");
}

ExponentVector::ExponentVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) {
    if (c < 0) throw PreconditionError("negative exponent");
    coords_.emplace_back(c);
  }
}

ExponentVector ExponentVector::unit(std::size_t dim, std::size_t index,
                                    const mpz_class& power) {
  ExponentVector e(dim);
  e.coords_.at(index) = power;
  return e;
}

mpz_class ExponentVector::total_degree() const {
  mpz_class s = 0;
  for (const auto& c : coords_) s += c;
  return s;
}

bool ExponentVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const mpz_class& c) { return sgn(c) == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
  require_same_dim(dim(), other.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  require_same_dim(dim(), other.dim());
  ExponentVector r(dim());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    r.coords_[i] = coords_[i] + other.coords_[i];
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  require_same_dim(dim(), other.dim());
  ExponentVector r(dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    r.coords_[i] = coords_[i] - other.coords_[i];
    if (sgn(r.coords_[i]) < 0) throw PreconditionError("negative exponent");
  }
  return r;
}

ExponentVector ExponentVector::scaled(const mpz_class& factor) const {
  if (sgn(factor) < 0) throw PreconditionError("negative exponent");
  ExponentVector r(dim());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    r.coords_[i] = coords_[i] * factor;
  return r;
}

ExponentVector ExponentVector::lcm(const ExponentVector& other) const {
  require_same_dim(dim(), other.dim());
  ExponentVector r(dim());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    r.coords_[i] = std::max(coords_[i], other.coords_[i]);
  return r;
}

bool ExponentVector::coprime(const ExponentVector& other) const {
  require_same_dim(dim(), other.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0 && sgn(other.coords_[i]) != 0) return false;
  return true;
}

bool operator==(const ExponentVector& a, const ExponentVector& b) {
  return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const ExponentVector& a,
                                 const ExponentVector& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  return a.dim() <=> b.dim();
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].get_str();
  }
  return s + ")";
}

}  // namespace closure_lab
