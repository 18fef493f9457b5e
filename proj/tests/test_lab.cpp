#include <random>

#include "closure_lab/error.hpp"
#include "closure_lab/lab.hpp"
#include "closure_lab/newton_polyhedron.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace closure_lab;

namespace {

MonomialIdeal mono(std::size_t d, const oracle::Points& pts) {
  return MonomialIdeal(d, oracle::to_exponents(pts));
}

oracle::Points points(const MonomialIdeal& i) {
  return oracle::to_points(i.generators());
}

oracle::Points oracle_power(const oracle::Points& g, std::size_t d, unsigned n) {
  oracle::Points acc{std::vector<long>(d, 0)};
  for (unsigned k = 0; k < n; ++k) acc = oracle::minimal(oracle::sums(acc, g));
  return acc;
}

bool subset(const oracle::Points& a, const oracle::Points& b) {
  for (const auto& p : a)
    if (!oracle::contains(b, p)) return false;
  return true;
}

// Largest s with a contained in J^s, by direct expansion.
std::uint64_t oracle_s(const oracle::Points& a, const oracle::Points& j,
                       std::size_t d, unsigned limit) {
  std::uint64_t s = 0;
  while (s < limit && subset(a, oracle_power(j, d, s + 1))) ++s;
  return s;
}

std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> rows(
    const UniformExponentReport& r) {
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> out;
  for (const auto& row : r.rows) out.emplace_back(row.n, row.s_bar, row.s_closure);
  return out;
}

}  // namespace

TEST_CASE("uniform_exponents examples") {
  auto r = uniform_exponents(mono(2, {{1, 0}, {0, 1}}), 4);
  CHECK(r.k_bar == 0);
  CHECK(r.k_cl == 0);
  for (const auto& row : r.rows) {
    CHECK(row.s_bar == row.n);
    CHECK(row.s_closure == row.n);
  }

  r = uniform_exponents(mono(2, {{2, 0}, {0, 2}}), 4);
  CHECK(r.k_bar == 1);
  CHECK(r.k_cl == 1);
  using R = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;
  CHECK(rows(r) == std::vector<R>{{1, 0, 0}, {2, 1, 1}, {3, 2, 2}, {4, 3, 3}});

  r = uniform_exponents(mono(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}), 3);
  CHECK(r.k_bar == 2);
  CHECK(r.n_max == 3);
}

TEST_CASE("uniform_exponents preconditions") {
  CHECK_THROWS_AS(uniform_exponents(MonomialIdeal::unit(2), 3), PreconditionError);
  CHECK_THROWS_AS(uniform_exponents(MonomialIdeal::zero(2), 3), PreconditionError);
  CHECK_THROWS_AS(uniform_exponents(mono(2, {{1, 0}}), 0), PreconditionError);
  Limits tight;
  tight.generator_cap = 5;
  try {
    uniform_exponents(mono(2, {{1, 0}, {0, 1}}), 8, tight);
    FAIL("expected a cap error");
  } catch (const CapExceeded& e) {
    CHECK(std::string(e.what()).find("n = ") != std::string::npos);
  }
}

TEST_CASE("property: exponent rows match direct expansion") {
  std::mt19937_64 rng(314);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2;
    IdealSampler sampler(rng(), {{d}, 2, 3, 4});
    const auto j = sampler.next();
    const auto g = points(j);
    const auto jbar = points(closure(j));
    const auto report = uniform_exponents(j, 3);
    for (const auto& row : report.rows) {
      const unsigned n = static_cast<unsigned>(row.n);
      CHECK(row.s_bar == oracle_s(oracle_power(jbar, d, n), g, d, n + 1));
      const auto cl = points(closure(mono(d, oracle_power(g, d, n))));
      CHECK(row.s_closure == oracle_s(cl, g, d, n + 1));
    }
  }
}

TEST_CASE("property: report invariants and monotonicity in n_max") {
  IdealSampler sampler(7, {{2, 3}, 2, 5, 6});
  for (int t = 0; t < 25; ++t) {
    const auto j = sampler.next();
    CHECK_FALSE(j.is_unit());
    CHECK_FALSE(j.is_zero());
    const auto r3 = uniform_exponents(j, 3);
    const auto r4 = uniform_exponents(j, 4);
    for (const auto& row : r4.rows) {
      CHECK(row.s_closure <= row.s_bar);
      CHECK(row.s_bar <= row.n);
    }
    CHECK(r4.k_bar <= r4.k_cl);
    CHECK(r4.k_cl <= j.dim() - 1);
    CHECK(r3.k_bar <= r4.k_bar);
    CHECK(r3.k_cl <= r4.k_cl);
  }
}

TEST_CASE("witness_pair generators") {
  auto w = witness_pair(2);
  CHECK(points(w.j) == oracle::Points{{0, 2}, {2, 0}});
  CHECK(points(w.i) == oracle::Points{{0, 2}, {1, 1}, {2, 0}});
  w = witness_pair(3);
  CHECK(points(w.i) ==
        oracle::Points{{0, 0, 3}, {0, 2, 1}, {0, 3, 0}, {2, 0, 1}, {3, 0, 0}});
  w = witness_pair(4);
  CHECK(w.j.size() == 4);
  CHECK(w.i.size() == 7);
  CHECK(ideal_contains(w.i, w.j));
  CHECK_THROWS_AS(witness_pair(1), PreconditionError);
}

TEST_CASE("verify_witness passes for small d") {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto v = verify_witness(d);
    CHECK(v.d == d);
    CHECK(v.integral);
    CHECK(v.product_is_diagonal);
    CHECK(v.product_outside_j);
    CHECK(v.power_not_in_j);
    CHECK(v.pass());
    CHECK(v.pairwise_reduction_numbers.size() == d - 1);
  }
}

TEST_CASE("lipman_sathaye_check examples") {
  auto r = lipman_sathaye_check(mono(2, {{2, 0}, {0, 2}}), 4);
  CHECK(r.holds());
  CHECK(r.rows.front().n == 1);
  CHECK(r.rows.back().n == 4);
  r = lipman_sathaye_check(mono(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3);
  CHECK(r.holds());
  CHECK(r.rows.front().n == 2);
  CHECK_THROWS_AS(lipman_sathaye_check(MonomialIdeal::unit(2), 3),
                  PreconditionError);
}

TEST_CASE("chain_check examples") {
  CHECK(chain_check(mono(2, {{2, 0}, {0, 3}}), 3).holds());
  CHECK(chain_check(mono(2, {{1, 0}}), 3).holds());
  const auto r = chain_check(mono(2, {{3, 0}, {0, 3}}), 2);
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[1].closure_power_in_closure_of_power);
}

TEST_CASE("property: chain and Lipman-Sathaye hold on samples") {
  IdealSampler sampler(99);
  for (int t = 0; t < 40; ++t) {
    const auto j = sampler.next();
    CHECK(chain_check(j, 3).holds());
    CHECK(lipman_sathaye_check(j, 3).holds());
  }
}

TEST_CASE("nilpotent_lift_bound") {
  const std::vector<mpz_class> a{3, 4}, none{}, one{1};
  CHECK(nilpotent_lift_bound(2, a) == 13);
  CHECK(nilpotent_lift_bound(0, none) == 0);
  CHECK(nilpotent_lift_bound(1, one) == 3);
  const std::vector<mpz_class> neg{-1};
  CHECK_THROWS_AS(nilpotent_lift_bound(1, neg), PreconditionError);
  CHECK_THROWS_AS(nilpotent_lift_bound(-1, none), PreconditionError);
}

TEST_CASE("sampler is deterministic and respects its config") {
  IdealSampler a(42), b(42), c(43);
  bool differs = false;
  for (int t = 0; t < 50; ++t) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs = differs || !(x == c.next());
    CHECK((x.dim() == 2 || x.dim() == 3));
    CHECK(x.size() <= 5);
    for (const auto& g : x.generators())
      for (const auto& e : g.coords()) CHECK(e <= 6);
    CHECK_FALSE(x.is_unit());
  }
  CHECK(differs);
  IdealSampler u(1);
  for (int t = 0; t < 200; ++t) {
    const auto v = u.uniform(3, 5);
    CHECK(v >= 3);
    CHECK(v <= 5);
  }
}

TEST_CASE("sample suite") {
  const auto s = run_sample_suite(30, 42, 3, 10);
  CHECK(s.trials.size() == 30);
  CHECK(s.failures() == 0);
  const auto again = run_sample_suite(30, 42, 3, 10);
  for (std::size_t t = 0; t < s.trials.size(); ++t) {
    CHECK(s.trials[t].ideal == again.trials[t].ideal);
    CHECK(s.trials[t].reduction_k == again.trials[t].reduction_k);
  }
}
