#include <doctest.h>

#include <algorithm>
#include <random>

#include "mincw/bounds.hpp"
#include "mincw/census.hpp"
#include "mincw/codewords.hpp"
#include "support/generators.hpp"

using namespace mincw;

TEST_CASE("trivial bound") {
  CHECK(trivial_ub(10, 3) == 7);
  CHECK(trivial_ub(9, 1, 5) == 1);
  CHECK(trivial_ub(15, 15) == 32767);
  CHECK(trivial_ub(5, 2, 3) == 4);
  CHECK_THROWS_AS(trivial_ub(64, 64, 8), DomainError);
}

TEST_CASE("matroid and binomial sum bounds") {
  CHECK(matroid_ub(6, 4) == 20);
  CHECK(matroid_ub(10, 5) == 210);
  for (int k = 1; k <= 14; ++k) CHECK(matroid_ub(k + 1, k) == binomial(k + 1, 2));
  CHECK(binomial_sum_ub(3, 1) == 10);
  CHECK(binomial_sum_ub(4, 2) == 41);
  CHECK(binomial_sum_ub(3, 3) == 6 + 15 + 20 + 15);
  CHECK(matroid_ub(6, 4) <= binomial_sum_ub(4, 2));
}

TEST_CASE("improved bound") {
  auto a = improved_ub(9, 2);
  CHECK(a.value == Rational(99));
  CHECK(a.floor == 99);
  CHECK(improved_ub(3, 2).value == Rational(10));
  CHECK(improved_ub(30, 2).value < Rational(binomial(32, 3)));
  // k = 4, t = 2: 10 + 3 (4/3)^2 + (4/3)^3 = 10 + 16/3 + 64/27.
  CHECK(improved_ub(4, 2).value == Rational(10) + Rational(16, 3) + Rational(64, 27));
  CHECK_THROWS(improved_ub(4, 0));
  for (int k = 10; k <= 60; ++k) CHECK(improved_ub(k, 2).value < Rational(matroid_ub(k + 2, k)));
}

TEST_CASE("high-rate bound is evaluated as printed") {
  CHECK(agrell_ub(15, 14) == Rational(16384, 22));
  CHECK_FALSE(agrell_ub(10, 6));
  CHECK(agrell_ub(10, 8) == Rational(32));
}

TEST_CASE("random coding estimate") {
  CHECK(random_coding_lb(5, 3) == Rational(69, 16));
  CHECK(*random_coding_lb(5, 3) <= Rational(6));
  CHECK_FALSE(random_coding_lb(4, 4));
  // The j = 0 term alone: q^(k-n), so the value is at least that.
  CHECK(*random_coding_lb(9, 4) >= Rational(1, 32));
}

TEST_CASE("construction lower bounds") {
  CHECK(projective_base_lb(9, 2) == 27);
  CHECK(projective_base_lb(4, 3) == 1);
  CHECK(kashyap_lb(4, 1) == 5);
  CHECK(testgen::count_minimal_literal(construct_double_unit_code(6, 2)) == kashyap_lb(6, 2));
  for (int k = 2; k <= 9; ++k) {
    for (int t = 1; t <= 3 && t + 1 <= k; ++t) {
      CHECK(BigInt(testgen::count_minimal_literal(construct_projective_base_code(k, t))) >= projective_base_lb(k, t));
    }
  }
}

TEST_CASE("projective codes meet k + t") {
  std::mt19937_64 rng(23);
  int seen = 0;
  for (int trial = 0; trial < 2000 && seen < 150; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 9);
    const int t = 1 + static_cast<int>(rng() % 3);
    auto code = testgen::random_full_rank_code(rng, k, k + t);
    if (!is_projective(code)) continue;
    ++seen;
    CHECK(testgen::count_minimal_literal(code) >= kashyap_lb(k, t));
  }
  CHECK(seen >= 100);
}

TEST_CASE("bounds bracket the exact value") {
  for (int k = 2; k <= 12; ++k) {
    for (int t = 1; t <= 3; ++t) {
      const Count m = maxmin(k + t, k).value;
      CHECK(projective_base_lb(k, t) <= m);
      CHECK(BigInt(m) <= matroid_ub(k + t, k));
      CHECK(BigInt(m) <= binomial_sum_ub(k, t));
      CHECK(BigInt(m) <= trivial_ub(k + t, k));
      CHECK(Rational(m) <= improved_ub(k, t).value);
    }
  }
}

TEST_CASE("report aggregation") {
  auto r = bounds_report(6, 3);
  CHECK(r.t == 3);
  CHECK(r.matroid_ub == 15);
  CHECK(r.binomial_sum_ub == 56);
  REQUIRE(r.exact);
  CHECK(r.exact->value == 7);

  auto s = bounds_report(11, 9);
  CHECK(s.exact->value == 63);
  CHECK(s.improved_ub->floor == 99);
  CHECK(s.matroid_ub == 165);

  auto big = bounds_report(40, 20);
  CHECK_FALSE(big.exact);
  CHECK_FALSE(big.exact_note.empty());
  CHECK(big.trivial_ub);
  CHECK_FALSE(bounds_report(64, 64, {}).trivial_ub == std::nullopt);
}
