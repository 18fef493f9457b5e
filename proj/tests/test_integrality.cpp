#include <random>

#include "closure_lab/error.hpp"
#include "closure_lab/expression.hpp"
#include "closure_lab/integrality.hpp"
#include "closure_lab/newton_polyhedron.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace closure_lab;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Polynomial P(std::string_view s) { return parse_polynomial(s, kXY); }

PolyIdeal ideal(std::initializer_list<std::string_view> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(P(g));
  return PolyIdeal(2, std::move(ps));
}

MonomialIdeal mono(std::size_t d, const oracle::Points& pts) {
  return MonomialIdeal(d, oracle::to_exponents(pts));
}

std::optional<std::uint64_t> k_of(const ReductionOutcome& r) {
  if (auto* w = std::get_if<ReductionWitness>(&r)) {
    CHECK(w->verified);
    return w->k;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("reduction_number examples") {
  const auto j = mono(2, {{2, 0}, {0, 2}});
  const auto i = mono(2, {{2, 0}, {1, 1}, {0, 2}});
  CHECK(k_of(reduction_number(j, i, 20)) == 1u);
  CHECK(k_of(reduction_number(i, i, 20)) == 0u);
  const auto r = reduction_number(j, mono(2, {{1, 0}, {0, 1}}), 10);
  REQUIRE(std::holds_alternative<NotUpTo>(r));
  CHECK(std::get<NotUpTo>(r).k_max == 10);

  CHECK_THROWS_AS(reduction_number(i, j, 5), PreconditionError);
  CHECK_THROWS_AS(reduction_number(ideal({"x^2", "y^2"}), ideal({"x", "y^3"}), 5),
                  PreconditionError);
}

TEST_CASE("reduction_number on the general path") {
  // J = (x^2 + y^2, xy) is a reduction of (x, y)^2.
  const auto j = ideal({"x^2 + y^2", "x*y"});
  CHECK(k_of(reduction_number(j, ideal({"x^2", "x*y", "y^2"}), 10)) == 1u);
  CHECK(k_of(reduction_number(j, j, 10)) == 0u);
  CHECK(k_of(reduction_number(ideal({"x^2", "y^2"}), ideal({"x^2", "y^2", "x*y"}),
                              10, TermOrder::Lex)) == 1u);
  // agrees with the monomial path
  const auto r = reduction_number(ideal({"x^2", "y^2"}), ideal({"x", "y"}), 4);
  CHECK(std::holds_alternative<NotUpTo>(r));
}

TEST_CASE("is_integral_ideal examples") {
  const auto j3 = mono(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  const auto i3 = mono(3, {{3, 0, 0}, {2, 0, 1}, {0, 3, 0}, {0, 2, 1}, {0, 0, 3}});
  CHECK(is_integral_ideal(j3, i3).is_yes());
  CHECK(is_integral_ideal(j3, j3).is_yes());
  const auto j = mono(2, {{2, 0}, {0, 2}});
  CHECK(is_integral_ideal(j, mono(2, {{1, 0}, {0, 1}})).is_no());

  const auto g = ideal({"x^2", "y^2"});
  CHECK(is_integral_ideal(g, ideal({"x*y"}), 10).is_yes());
  // monomial generators are decided exactly even as polynomials
  CHECK(is_integral_ideal(g, ideal({"x"}), 3).is_no());
  const auto unknown =
      is_integral_ideal(ideal({"x^2 + y^2", "x*y"}), ideal({"x"}), 3);
  CHECK(unknown.is_unknown());
  CHECK(unknown.cap() == 3);
  CHECK(to_string(unknown) == "Unknown");
  CHECK(to_string(TriState::yes()) == "Yes");
}

TEST_CASE("is_integral_element examples") {
  const auto j = mono(2, {{2, 0}, {0, 2}});
  CHECK(is_integral_element(P("x*y"), j, 20).is_yes());
  CHECK(is_integral_element(P("3*x*y"), j, 20).is_yes());
  CHECK(is_integral_element(P("x^2"), j, 20).is_yes());
  CHECK(is_integral_element(P("y"), j, 20).is_no());
  CHECK(is_integral_element(P("x^2 + x*y"), j, 20).is_yes());
  // A degree-one element is never integral over an ideal generated in
  // degree two; the general path can only report Unknown.
  const auto xy = is_integral_element(P("x + y"), j, 6);
  CHECK(xy.is_unknown());
  CHECK(xy.cap() == 6);

  CHECK(is_integral_element(P("x + 7"), MonomialIdeal::unit(2), 1).is_yes());
  CHECK(is_integral_element(P("x^2 + y^2"), ideal({"x^2 + y^2", "x*y"}), 5)
            .is_yes());
  CHECK(is_integral_element(P("x^2"), ideal({"x^2 + y^2", "x*y"}), 5).is_yes());
  CHECK_THROWS_AS(is_integral_element(Polynomial(2), j, 5), PreconditionError);
}

TEST_CASE("monomial certificates") {
  const auto j = mono(2, {{2, 0}, {0, 2}});
  auto c = monomial_certificate(ExponentVector{1, 1}, j);
  CHECK(c.degree == 2);
  CHECK(c.coefficients[0].is_zero());
  CHECK(c.coefficients[1] == P("-x^2*y^2"));
  CHECK(verify_certificate(c, to_poly_ideal(j).generators()));

  c = monomial_certificate(ExponentVector{2, 0}, j);
  CHECK(c.degree == 1);
  CHECK(c.coefficients[0] == P("-x^2"));

  c = monomial_certificate(ExponentVector{2, 1}, mono(2, {{2, 0}}));
  CHECK(c.degree == 1);
  CHECK(c.coefficients[0] == P("-x^2*y"));
  CHECK(verify_certificate(c, std::vector<Polynomial>{P("x^2")}));

  CHECK_THROWS_AS(monomial_certificate(ExponentVector{1, 0}, j),
                  PreconditionError);
}

TEST_CASE("tampered certificates are rejected") {
  const auto j = mono(2, {{2, 0}, {0, 2}});
  const auto gens = to_poly_ideal(j).generators();
  const auto good = monomial_certificate(ExponentVector{1, 1}, j);
  REQUIRE(verify_certificate(good, gens));

  auto bad = good;
  bad.coefficients[1] = P("-x^2*y^2 + 1");
  CHECK_FALSE(verify_certificate(bad, gens));
  bad = good;
  bad.element = P("x*y + 1");
  CHECK_FALSE(verify_certificate(bad, gens));
  bad = good;
  bad.memberships[1].terms[0].quotient = P("2");
  CHECK_FALSE(verify_certificate(bad, gens));
}

TEST_CASE("cramer certificates") {
  const auto j = ideal({"x^2", "y^2"});
  {
    const auto i = ideal({"x^2", "y^2", "x*y"});
    const auto c = cramer_certificate(P("x*y"), j, i, 1);
    CHECK(c.degree == 3);
    CHECK(verify_certificate(c, j.generators()));
  }
  {
    const auto c = cramer_certificate(P("x^2"), j, j, 0);
    CHECK(c.degree == 1);
    CHECK(c.coefficients[0] == P("-x^2"));
    CHECK(verify_certificate(c, j.generators()));
  }
  {
    const auto jx = ideal({"x^2"});
    const auto c = cramer_certificate(P("x^2"), jx, jx, 0);
    CHECK(c.degree == 1);
    CHECK(verify_certificate(c, jx.generators()));
  }
  {
    const auto g = ideal({"x^2 + y^2", "x*y"});
    const auto i = ideal({"x^2", "x*y", "y^2"});
    const auto c = cramer_certificate(P("x^2 - 2*y^2"), g, i, 1);
    CHECK(verify_certificate(c, g.generators()));
  }
  CHECK_THROWS_AS(cramer_certificate(P("x"), j, j, 0), PreconditionError);
  CHECK_THROWS_AS(
      cramer_certificate(P("x*y"), j, ideal({"x^2", "y^2", "x*y"}), 1,
                         TermOrder::Grevlex, {}, 2),
      CapExceeded);
}

TEST_CASE("property: polyhedral test agrees with reduction search") {
  std::mt19937_64 rng(404);
  int yes = 0, no = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t d = 2 + rng() % 2;
    const auto j = mono(d, oracle::random_points(rng, d, 1 + rng() % 3, 4));
    if (j.is_unit()) continue;
    auto extra = oracle::random_points(rng, d, 1, 4);
    if (rng() % 2) {
      // bias toward integral cases: draw from the closure
      const auto g = closure(j).generators();
      extra = {oracle::to_small(g[rng() % g.size()])};
    }
    const auto i = ideal_sum(j, mono(d, extra));
    const auto integral = is_integral_ideal(j, i);
    const auto k = k_of(reduction_number(j, i, 10));
    CHECK(integral.is_yes() == k.has_value());
    (integral.is_yes() ? yes : no)++;
  }
  CHECK(yes > 5);
  CHECK(no > 5);
}

TEST_CASE("property: a monomial ideal is a reduction of its closure") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 1 + rng() % 3;
    const auto j = mono(d, oracle::random_points(rng, d, 1 + rng() % 3, 4));
    CHECK(k_of(reduction_number(j, closure(j), 10)).has_value());
  }
}

TEST_CASE("property: monomial certificates verify") {
  std::mt19937_64 rng(12);
  int made = 0;
  for (int t = 0; t < 80; ++t) {
    const std::size_t d = 2 + rng() % 2;
    const auto j = mono(d, oracle::random_points(rng, d, 1 + rng() % 3, 4));
    if (j.is_unit()) continue;
    const auto gens = to_poly_ideal(j).generators();
    const auto cl = closure(j);
    for (const auto& g : cl.generators()) {
      const auto c = monomial_certificate(g, j);
      CHECK(verify_certificate(c, gens));
      ++made;
    }
  }
  CHECK(made > 50);
}

TEST_CASE("property: reduction number stays within the degree-sum bound") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 2;
    const auto j = mono(d, oracle::random_points(rng, d, 1 + rng() % 3, 4));
    if (j.is_unit()) continue;
    const auto cl = closure(j).generators();
    const auto f = cl[rng() % cl.size()];
    const auto i = ideal_sum(j, MonomialIdeal(d, {f}));
    std::uint64_t bound = 1;
    for (const auto& g : i.generators()) bound += monomial_certificate(g, j).degree;
    const auto k = k_of(reduction_number(j, i, bound));
    REQUIRE(k.has_value());
    CHECK(*k <= bound);
  }
}

TEST_CASE("property: raising k_max never revokes an answer") {
  const auto j = ideal({"x^2 + y^2", "x*y"});
  const std::vector<Polynomial> fs{P("x*y"), P("x^2 + x*y"), P("x + y"),
                                   P("x*y + y^2"), P("y")};
  const auto jm = mono(2, {{2, 0}, {0, 2}});
  for (const auto& f : fs) {
    std::optional<TriState> prev;
    std::optional<TriState> prev_mono;
    for (std::uint64_t k = 1; k <= 5; ++k) {
      const auto now = is_integral_element(f, j, k);
      CHECK_FALSE(now.is_no());
      if (prev && prev->is_yes()) CHECK(now.is_yes());
      prev = now;
      const auto m = is_integral_element(f, jm, k);
      if (prev_mono && !prev_mono->is_unknown()) CHECK(m == *prev_mono);
      prev_mono = m;
    }
  }
}
