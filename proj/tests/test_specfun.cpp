#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "swipt/errors.hpp"
#include "swipt/specfun.hpp"

using swipt::specfun::exp_integral_e1;
using swipt::specfun::exp_scaled_e1;
using swipt::specfun::harmonic;

TEST_CASE("E1 reference points") {
  // Frozen from an independent quadrature of int_1^inf e^{-y}/y dy.
  CHECK(exp_integral_e1(1.0) == doctest::Approx(0.21938393439552).epsilon(1e-12));
  CHECK(std::abs(exp_integral_e1(10.0) / 4.156968929685324e-06 - 1.0) < 1e-10);
}

TEST_CASE("E1 matches quadrature and Boost on a log grid") {
  for (int i = 0; i < 100; ++i) {
    const double x = std::pow(10.0, -6.0 + 8.0 * i / 99.0);
    const double value = exp_integral_e1(x);
    CAPTURE(x);
    CHECK(std::abs(value / oracle::e1_quadrature(x) - 1.0) < 1e-10);
    CHECK(std::abs(value / oracle::e1_boost(x) - 1.0) < 1e-10);
  }
}

TEST_CASE("E1 wide range against Boost") {
  for (const double x : {1e-8, 1e-3, 0.5, 0.999, 1.0, 1.001, 2.0, 50.0, 300.0, 700.0}) {
    CAPTURE(x);
    CHECK(std::abs(exp_integral_e1(x) / oracle::e1_boost(x) - 1.0) < 1e-10);
    CHECK(std::abs(exp_scaled_e1(x) / (std::exp(x) * oracle::e1_boost(x)) - 1.0) < 1e-10);
  }
  CHECK(exp_integral_e1(800.0) == 0.0);
  CHECK(exp_scaled_e1(1e6) == doctest::Approx(1.0 / (1e6 + 1.0)).epsilon(1e-10));
}

TEST_CASE("E1 leading asymptotic term") {
  const double x = 1000.0;
  CHECK(std::abs(x * exp_scaled_e1(x) - 1.0) < 0.01);
}

TEST_CASE("E1 is decreasing and convex") {
  for (int i = 0; i < 200; ++i) {
    const double x1 = 0.01 + 0.05 * i;
    const double x2 = x1 + 0.02;
    const double x3 = x2 + 0.02;
    CHECK(exp_integral_e1(x1) > exp_integral_e1(x2));
    CHECK(exp_integral_e1(x2) > exp_integral_e1(x3));
    CHECK(exp_integral_e1(x2) <= 0.5 * (exp_integral_e1(x1) + exp_integral_e1(x3)));
  }
}

TEST_CASE("E1 domain errors") {
  CHECK_THROWS_AS(exp_integral_e1(0.0), swipt::DomainError);
  CHECK_THROWS_AS(exp_integral_e1(-1.0), swipt::DomainError);
  CHECK_THROWS_AS(exp_integral_e1(std::nan("")), swipt::DomainError);
  CHECK_THROWS_AS(exp_integral_e1(std::numeric_limits<double>::infinity()), swipt::DomainError);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1) == 1.0);
  CHECK(harmonic(2) == 1.5);
  CHECK(harmonic(3) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
  CHECK_THROWS_AS(harmonic(0), swipt::DomainError);
}

TEST_CASE("harmonic increments") {
  for (unsigned n = 1; n <= 1'000'000; n = n < 100 ? n + 1 : n * 11 / 10) {
    const double next = harmonic(n + 1);
    const double ulp = std::nextafter(next, 2.0 * next) - next;
    CAPTURE(n);
    CHECK(std::abs(next - harmonic(n) - 1.0 / (n + 1.0)) <= ulp);
  }
}
