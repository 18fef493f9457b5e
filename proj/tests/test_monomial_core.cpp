#include <random>

#include "closure_lab/error.hpp"
#include "closure_lab/monomial_ideal.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace closure_lab;

namespace {

MonomialIdeal ideal(std::size_t d, const oracle::Points& pts) {
  return MonomialIdeal(d, oracle::to_exponents(pts));
}

oracle::Points points(const MonomialIdeal& i) {
  return oracle::to_points(i.generators());
}

}  // namespace

TEST_CASE("minimalize keeps the antichain of minimal elements") {
  CHECK(points(ideal(2, {{2, 0}, {3, 1}, {0, 1}})) ==
        oracle::Points{{0, 1}, {2, 0}});
  CHECK(ideal(2, {}).is_zero());
  CHECK(points(ideal(2, {{1, 1}, {1, 1}})) == oracle::Points{{1, 1}});
}

TEST_CASE("minimalize rejects mixed lengths") {
  std::vector<ExponentVector> gens{ExponentVector{1, 0}, ExponentVector{1}};
  CHECK_THROWS_AS(minimalize(2, gens), DimensionMismatch);
}

TEST_CASE("contains_monomial") {
  // (x1 x2 x3)^2 is outside (x1^3, x2^3, x3^3).
  const auto cubes = ideal(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  CHECK_FALSE(contains_monomial(cubes, ExponentVector{2, 2, 2}));
  CHECK(contains_monomial(ideal(2, {{1, 0}, {0, 1}}), ExponentVector{1, 0}));
  CHECK_FALSE(contains_monomial(MonomialIdeal::zero(2), ExponentVector{4, 4}));
  CHECK_THROWS_AS(contains_monomial(cubes, ExponentVector{1, 1}),
                  DimensionMismatch);
}

TEST_CASE("ideal_sum") {
  CHECK(points(ideal_sum(ideal(2, {{2, 0}}), ideal(2, {{0, 2}}))) ==
        oracle::Points{{0, 2}, {2, 0}});
  CHECK(points(ideal_sum(ideal(2, {{1, 0}}), ideal(2, {{2, 0}}))) ==
        oracle::Points{{1, 0}});
  CHECK(points(ideal_sum(ideal(2, {{2, 0}, {0, 2}}), ideal(2, {{1, 1}}))) ==
        oracle::Points{{0, 2}, {1, 1}, {2, 0}});
  CHECK_THROWS_AS(ideal_sum(ideal(2, {{1, 0}}), ideal(3, {{1, 0, 0}})),
                  DimensionMismatch);
}

TEST_CASE("ideal_product against pairwise expansion") {
  const oracle::Points a{{2, 0}, {0, 2}}, b{{2, 0}, {1, 1}, {0, 2}};
  const auto expected = oracle::minimal(oracle::sums(a, b));
  REQUIRE(expected ==
          oracle::Points{{0, 4}, {1, 3}, {2, 2}, {3, 1}, {4, 0}});
  CHECK(points(ideal_product(ideal(2, a), ideal(2, b))) == expected);

  const auto any = ideal(2, {{3, 1}, {0, 2}});
  CHECK(ideal_product(any, MonomialIdeal::unit(2)) == any);
  CHECK(ideal_product(any, MonomialIdeal::zero(2)).is_zero());
}

TEST_CASE("ideal_product enforces the generator cap") {
  Limits tight;
  tight.generator_cap = 4;
  const auto m = ideal(2, {{1, 0}, {0, 1}});
  CHECK_NOTHROW(ideal_power(m, 3, tight));  // 4 generators
  CHECK_THROWS_AS(ideal_power(m, 4, tight), CapExceeded);
}

TEST_CASE("ideal_power") {
  const auto m = ideal(2, {{1, 0}, {0, 1}});
  CHECK(points(ideal_power(m, 2)) == oracle::Points{{0, 2}, {1, 1}, {2, 0}});
  CHECK(ideal_power(m, 1) == m);
  CHECK(ideal_power(m, 0).is_unit());
  const oracle::Points sq{{2, 0}, {0, 2}};
  const auto expected = oracle::minimal(oracle::power_unminimized(sq, 2, 2));
  REQUIRE(expected == oracle::Points{{0, 4}, {2, 2}, {4, 0}});
  CHECK(points(ideal_power(ideal(2, sq), 2)) == expected);
}

TEST_CASE("exponents are arbitrary precision") {
  const mpz_class huge("123456789012345678901234567890");
  const MonomialIdeal j(2, {ExponentVector::unit(2, 0, huge),
                            ExponentVector::unit(2, 1, 1)});
  const auto p = ideal_power(j, 3);
  CHECK(contains_monomial(p, ExponentVector::unit(2, 0, huge * 3)));
  CHECK_FALSE(contains_monomial(p, ExponentVector::unit(2, 0, huge * 3 - 1)));
}

TEST_CASE("ideal_contains") {
  CHECK(ideal_contains(ideal(1, {{1}}), ideal(1, {{2}})));
  CHECK_FALSE(ideal_contains(ideal(2, {{2, 0}, {0, 2}}), ideal(2, {{1, 1}})));
  const auto a = ideal(2, {{2, 1}, {0, 3}});
  CHECK(ideal_contains(a, a));
}

TEST_CASE("property: powers, products and minimalization agree") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    const auto pts = oracle::random_points(rng, d, 1 + rng() % 4, 4);
    const auto a = ideal(d, pts);

    MonomialIdeal iterated = MonomialIdeal::unit(d);
    for (unsigned m = 0; m <= 3; ++m) {
      CHECK(ideal_power(a, m) == iterated);
      CHECK(points(iterated) ==
            oracle::minimal(oracle::power_unminimized(pts, d, m)));
      iterated = ideal_product(iterated, a);
    }
    for (unsigned x = 0; x <= 2; ++x)
      for (unsigned y = 0; y <= 2; ++y)
        CHECK(ideal_power(a, x + y) ==
              ideal_product(ideal_power(a, x), ideal_power(a, y)));

    // Antichain, fixed point, and brute-force membership.
    const auto& g = a.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t k = 0; k < g.size(); ++k)
        if (i != k) CHECK_FALSE(g[i].divides(g[k]));
    CHECK(minimalize(d, g) == a);
    for (const auto& m : oracle::random_points(rng, d, 8, 6))
      CHECK(contains_monomial(a, oracle::to_exponent(m)) ==
            oracle::contains(pts, m));
  }
}

TEST_CASE("property: containment is a partial order") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2;
    const auto a = ideal(d, oracle::random_points(rng, d, 1 + rng() % 3, 3));
    const auto b = ideal(d, oracle::random_points(rng, d, 1 + rng() % 3, 3));
    const auto c = ideal(d, oracle::random_points(rng, d, 1 + rng() % 3, 3));
    CHECK(ideal_contains(a, a));
    if (ideal_contains(a, b) && ideal_contains(b, a)) CHECK(a == b);
    if (ideal_contains(a, b) && ideal_contains(b, c)) CHECK(ideal_contains(a, c));
  }
}
