#include "closure_lab/newton_polyhedron.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "closure_lab/error.hpp"
#include "closure_lab/rational_simplex.hpp"

namespace closure_lab {

NewtonPolyhedron::NewtonPolyhedron(std::size_t dim,
                                   std::vector<ExponentVector> vertices)
    : dim_(dim), vertices_(std::move(vertices)) {
  if (vertices_.empty())
    throw PreconditionError("Newton polyhedron needs at least one vertex");
  for (const auto& v : vertices_) require_same_dim(dim_, v.dim());
}

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal)
    : NewtonPolyhedron(ideal.dim(), ideal.generators()) {}

bool RationalCertificate::verify(const NewtonPolyhedron& poly,
                                 const ExponentVector& point) const {
  if (lambdas.size() != poly.vertices().size()) return false;
  if (point.dim() != poly.dim()) return false;
  mpq_class total = 0;
  for (const auto& l : lambdas) {
    if (sgn(l) < 0) return false;
    total += l;
  }
  if (total != 1) return false;
  for (std::size_t j = 0; j < poly.dim(); ++j) {
    mpq_class coord = 0;
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      coord += lambdas[i] * poly.vertices()[i][j];
    if (coord > point[j]) return false;
  }
  return true;
}

mpz_class RationalCertificate::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& q : lambdas) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                        q.get_den_mpz_t());
  return l;
}

bool SeparatingHalfspace::separates(const NewtonPolyhedron& poly,
                                    const ExponentVector& point) const {
  if (normal.size() != poly.dim() || point.dim() != poly.dim()) return false;
  auto dot = [&](const ExponentVector& v) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < normal.size(); ++j) s += normal[j] * v[j];
    return s;
  };
  for (const auto& c : normal)
    if (sgn(c) < 0) return false;
  for (const auto& v : poly.vertices())
    if (dot(v) < offset) return false;
  return dot(point) < offset;
}

namespace {

// LP: sum_i lambda_i v_{i,j} + s_j = a_j, sum_i lambda_i = 1.
NpMembership solve_membership(const NewtonPolyhedron& poly,
                              const ExponentVector& a) {
  const std::size_t d = poly.dim();
  const std::size_t k = poly.vertices().size();
  std::vector<std::vector<mpq_class>> rows(d + 1,
                                           std::vector<mpq_class>(k + d));
  std::vector<mpq_class> rhs(d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < k; ++i) rows[j][i] = poly.vertices()[i][j];
    rows[j][k + j] = 1;
    rhs[j] = a[j];
  }
  for (std::size_t i = 0; i < k; ++i) rows[d][i] = 1;
  rhs[d] = 1;

  FeasibilityResult lp = solve_feasibility(rows, rhs);
  NpMembership out;
  if (lp.feasible) {
    out.member = true;
    out.certificate = RationalCertificate{
        std::vector<mpq_class>(lp.solution.begin(), lp.solution.begin() + k)};
    if (!out.certificate->verify(poly, a))
      throw InternalInconsistency("Newton membership certificate rejected");
    return out;
  }
  // Farkas y = (w, u): w <= 0 from the slack columns, w.v_i + u <= 0, and
  // w.a + u > 0. Hence (-w).v_i >= u > (-w).a.
  mpz_class scale = 1;
  for (const auto& y : lp.farkas)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), y.get_den_mpz_t());
  SeparatingHalfspace h;
  h.normal.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    mpq_class c = -lp.farkas[j] * scale;
    h.normal[j] = c.get_num();
  }
  h.offset = mpq_class(lp.farkas[d] * scale).get_num();
  if (!h.separates(poly, a))
    throw InternalInconsistency("Newton separation certificate rejected");
  out.separator = std::move(h);
  return out;
}

}  // namespace

NpMembership np_member(const NewtonPolyhedron& poly, const ExponentVector& a) {
  require_same_dim(poly.dim(), a.dim());
  const auto& verts = poly.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i].divides(a)) {
      RationalCertificate cert{std::vector<mpq_class>(verts.size(), 0)};
      cert.lambdas[i] = 1;
      return NpMembership{true, std::move(cert), std::nullopt};
    }
  }
  return solve_membership(poly, a);
}

namespace {

struct SmallHalfspace {
  std::vector<std::int64_t> normal;
  std::int64_t offset;
};

bool to_small(const SeparatingHalfspace& h, SmallHalfspace& out) {
  out.normal.clear();
  for (const auto& c : h.normal) {
    if (!c.fits_slong_p()) return false;
    out.normal.push_back(c.get_si());
  }
  if (!h.offset.fits_slong_p()) return false;
  out.offset = h.offset.get_si();
  return true;
}

}  // namespace

MonomialIdeal closure(const MonomialIdeal& ideal, const Limits& limits) {
  const std::size_t d = ideal.dim();
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  const NewtonPolyhedron poly(ideal);

  std::vector<mpz_class> bound(d, 0);
  for (const auto& v : ideal.generators())
    for (std::size_t j = 0; j < d; ++j) bound[j] = std::max(bound[j], v[j]);
  mpz_class points = 1;
  for (const auto& b : bound) points *= b + 1;
  if (points > limits.box_point_cap)
    throw CapExceeded("closure enumeration box", limits.box_point_cap);

  // Every quantity below is at most box_point_cap, so machine integers hold.
  const std::size_t count = points.get_ui();
  std::vector<std::int64_t> extent(d);
  for (std::size_t j = 0; j < d; ++j) extent[j] = bound[j].get_si() + 1;
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t j = d - 1; j-- > 0;) stride[j] = stride[j + 1] * extent[j + 1];
  std::vector<std::vector<std::int64_t>> verts;
  for (const auto& v : ideal.generators()) {
    std::vector<std::int64_t> row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = v[j].get_si();
    verts.push_back(std::move(row));
  }

  std::vector<std::uint8_t> member(count, 0);
  std::vector<SmallHalfspace> cuts;
  std::vector<ExponentVector> minimal;
  std::vector<std::int64_t> p(d, 0);

  // Indices increase lexicographically, so every p - e_j precedes p.
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (idx > 0) {
      for (std::size_t j = d; j-- > 0;) {
        if (++p[j] < extent[j]) break;
        p[j] = 0;
      }
    }
    bool in = false;
    for (std::size_t j = 0; j < d && !in; ++j)
      in = p[j] > 0 && member[idx - stride[j]];
    if (in) {
      member[idx] = 1;
      continue;
    }
    bool cut = std::any_of(cuts.begin(), cuts.end(), [&](const auto& h) {
      __int128 s = 0;
      for (std::size_t j = 0; j < d; ++j)
        s += static_cast<__int128>(h.normal[j]) * p[j];
      return s < h.offset;
    });
    if (cut) continue;
    bool dominated = std::any_of(verts.begin(), verts.end(), [&](const auto& v) {
      for (std::size_t j = 0; j < d; ++j)
        if (v[j] > p[j]) return false;
      return true;
    });
    std::vector<mpz_class> coords(p.begin(), p.end());
    ExponentVector point(std::move(coords));
    if (dominated) {
      member[idx] = 1;
      minimal.push_back(std::move(point));
      continue;
    }
    NpMembership res = solve_membership(poly, point);
    if (res.member) {
      member[idx] = 1;
      minimal.push_back(std::move(point));
    } else {
      SmallHalfspace h;
      if (to_small(*res.separator, h)) cuts.push_back(std::move(h));
    }
  }
  return minimalize(d, minimal, limits);
}

bool closure_member(const MonomialIdeal& ideal, const ExponentVector& m) {
  require_same_dim(ideal.dim(), m.dim());
  if (ideal.is_zero()) throw PreconditionError("closure_member needs a nonzero ideal");
  return np_member(NewtonPolyhedron(ideal), m).member;
}

}  // namespace closure_lab
