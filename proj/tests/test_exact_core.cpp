#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "support/generators.hpp"
#include "trisphere/exact_core.hpp"
#include "trisphere/modular_group.hpp"

using namespace trisphere;

TEST_CASE("reduction to lowest terms") {
  CHECK(ExtendedRational(2, 6) == ExtendedRational(1, 3));
  CHECK(ExtendedRational(-3, 0) == ExtendedRational(1, 0));
  CHECK(ExtendedRational(4, -6) == ExtendedRational(-2, 3));

  CHECK(ExtendedRational(7, 0).num() == 1);
  CHECK(ExtendedRational(7, 0).is_infinity());
  CHECK(ExtendedRational(0, -5) == ExtendedRational(0, 1));
  CHECK_THROWS_AS(ExtendedRational(0, 0), std::invalid_argument);
}

TEST_CASE("reduction is scale invariant") {
  auto gen = testing::seeded(101);
  std::uniform_int_distribution<long> scale(1, 5000);
  for (int i = 0; i < 500; ++i) {
    const ExtendedRational r = testing::random_cusp(gen);
    long t = scale(gen);
    if (i % 2 == 0) t = -t;
    CHECK(ExtendedRational(r.num() * t, r.den() * t) == r);
  }
}

TEST_CASE("cusp classes from parity") {
  CHECK(cusp_class(ExtendedRational(1, 0)) == CuspClass::Infinity);
  CHECK(cusp_class(ExtendedRational(0, 1)) == CuspClass::Zero);
  CHECK(cusp_class(ExtendedRational(5, 3)) == CuspClass::One);
  CHECK(cusp_class(ExtendedRational(-7, 4)) == CuspClass::Infinity);
  CHECK(cusp_class(ExtendedRational(2, 3)) == CuspClass::Zero);
}

TEST_CASE("cusp class is constant on level-2 orbits") {
  auto gen = testing::seeded(102);
  for (int i = 0; i < 1000; ++i) {
    const ExtendedRational r = testing::random_cusp(gen);
    const UnimodularMatrix g = testing::random_gamma2_element(gen);
    REQUIRE(in_gamma2(g));
    CHECK(cusp_class(apply_to_cusp(g, r)) == cusp_class(r));
  }
}

TEST_CASE("eisenstein and gaussian norms") {
  CHECK(norm(EisensteinInt{1, 2}) == 3);
  CHECK(norm(EisensteinInt{0, 0}) == 0);
  CHECK(norm(EisensteinInt{1, 3}) == 7);
  CHECK(norm(GaussianInt{1, 2}) == 5);
  CHECK(norm(GaussianInt{0, 0}) == 0);
  CHECK(norm(GaussianInt{2, 3}) == 13);
}

TEST_CASE("norm symmetries") {
  auto gen = testing::seeded(103);
  std::uniform_int_distribution<long> dist(-2000, 2000);
  for (int i = 0; i < 400; ++i) {
    const Int a(dist(gen)), b(dist(gen));
    const Int n = norm(EisensteinInt{a, b});
    CHECK(n >= 0);
    CHECK(norm(EisensteinInt{b, a}) == n);
    CHECK(norm(EisensteinInt{-a, -b}) == n);
    CHECK(norm(GaussianInt{a, b}) == norm(GaussianInt{b, a}));
  }
}

TEST_CASE("quadratic points live in the open upper half-plane") {
  const QuadraticPoint w(Rat(-1, 2), Rat(1, 2), 3);
  CHECK(w == omega());
  CHECK_THROWS_AS(QuadraticPoint(Rat(0), Rat(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(QuadraticPoint(Rat(0), Rat(-1), 1), std::invalid_argument);
  CHECK_THROWS_AS(QuadraticPoint(Rat(0), Rat(1), 2), std::invalid_argument);
}

TEST_CASE("ordering of extended rationals") {
  CHECK(ExtendedRational(1, 0) < ExtendedRational(-100, 1));
  CHECK(ExtendedRational(1, 3) < ExtendedRational(1, 2));
  CHECK(ExtendedRational(-1, 2) < ExtendedRational(1, 3));
  CHECK_FALSE(ExtendedRational(1, 2) < ExtendedRational(1, 2));
}

TEST_CASE("primality test against trial division") {
  const auto trial = [](long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (long n = 0; n <= 3000; ++n) CHECK(is_prime(Int(n)) == trial(n));

  CHECK(is_prime(Int("2305843009213693951")));  // 2^61 − 1
  CHECK_FALSE(is_prime(Int(561)));              // Carmichael
  CHECK_FALSE(is_prime(Int("2305843009213693953")));
  CHECK(is_prime(Int("170141183460469231731687303715884105727")));  // 2^127 − 1
}
