#include <doctest.h>

#include <cmath>
#include <random>

#include <boost/math/special_functions/bessel.hpp>

#include "../support/oracles.hpp"
#include "spheremax/errors.hpp"
#include "spheremax/specfun.hpp"

using namespace spheremax;
using specfun::Complex;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

}  // namespace

TEST_CASE("log gamma examples") {
  CHECK(std::abs(specfun::log_gamma(Complex(1.0))) < 1e-15);
  CHECK(specfun::log_gamma(Complex(0.5)).real() == doctest::Approx(0.5723649429247001).epsilon(1e-14));
  CHECK(specfun::gamma(Complex(2.0)).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(specfun::gamma(Complex(1.5)).real() == doctest::Approx(std::sqrt(oracle::kPi) / 2).epsilon(1e-14));
  CHECK(specfun::gamma(Complex(2.5)).real() == doctest::Approx(3 * std::sqrt(oracle::kPi) / 4).epsilon(1e-14));
}

TEST_CASE("gamma at integers and half-integers") {
  CHECK(specfun::gamma(Complex(5.0)).real() == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(specfun::gamma(Complex(0.5)).real() == doctest::Approx(std::sqrt(oracle::kPi)).epsilon(1e-14));
  for (double x = -7.5; x < 40.0; x += 0.37) {
    if (std::abs(x - std::round(x)) < 1e-9 && x <= 0) continue;
    CHECK(std::abs(specfun::gamma(x) / std::tgamma(x) - 1.0) < 1e-13);
  }
}

TEST_CASE("modulus of gamma on the imaginary axis") {
  // |Γ(i)|² = π/sinh π.
  const double expected = std::sqrt(oracle::kPi / std::sinh(oracle::kPi));
  CHECK(std::abs(specfun::gamma(Complex(0.0, 1.0))) == doctest::Approx(expected).epsilon(1e-13));
  for (double y : {0.1, 2.5, 17.0, 60.0}) {
    const double lhs = 2.0 * specfun::log_gamma(Complex(0.0, y)).real();
    const double rhs = std::log(oracle::kPi / (y * std::sinh(oracle::kPi * y)));
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
  }
  // |Γ(½+iy)|² = π/cosh(πy)
  for (double y : {0.3, 4.0, 100.0, 900.0}) {
    const double lhs = 2.0 * specfun::log_gamma(Complex(0.5, y)).real();
    const double rhs = std::log(oracle::kPi) - (oracle::kPi * y + std::log1p(std::exp(-2 * oracle::kPi * y)) - std::log(2.0));
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("log gamma against a Stirling oracle on vertical lines") {
  for (double re : {-3.3, 0.25, 1.5, 2.75, 12.0}) {
    for (double im : {-950.0, -31.0, -2.0, 0.7, 5.0, 150.0, 1000.0}) {
      const Complex z(re, im);
      const Complex a = std::exp(specfun::log_gamma(z) - oracle::log_gamma_stirling(z));
      CHECK(std::abs(a - 1.0) < 1e-11);
    }
  }
}

TEST_CASE("log gamma principal branch") {
  for (double im : {-400.0, -3.0, 0.5, 77.0}) {
    const double v = specfun::log_gamma(Complex(0.3, im)).imag();
    CHECK(v > -oracle::kPi);
    CHECK(v <= oracle::kPi);
  }
}

TEST_CASE("reflection and recurrence") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-6.0, 6.0), im(-20.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    const Complex z(re(rng), im(rng));
    const Complex lhs = specfun::gamma(z) * specfun::gamma(1.0 - z);
    const Complex rhs = oracle::kPi / std::sin(oracle::kPi * z);
    CHECK(rel(lhs, rhs) < 1e-11);
    CHECK(rel(specfun::gamma(z + 1.0), z * specfun::gamma(z)) < 1e-12);
  }
}

TEST_CASE("poles raise domain errors") {
  CHECK_THROWS_AS(specfun::gamma(Complex(0.0)), DomainError);
  CHECK_THROWS_AS(specfun::gamma(Complex(-3.0)), DomainError);
  CHECK_THROWS_AS(specfun::gamma(-12.0), DomainError);
  CHECK_NOTHROW(specfun::gamma(Complex(-3.0, 1e-8)));
}

TEST_CASE("digamma and polygamma special values") {
  CHECK(specfun::digamma(1.0) == doctest::Approx(-oracle::kEulerGamma).epsilon(1e-14));
  CHECK(specfun::digamma(0.5) == doctest::Approx(-oracle::kEulerGamma - 2 * std::log(2.0)).epsilon(1e-14));
  CHECK(specfun::digamma(1.5) == doctest::Approx(2 - oracle::kEulerGamma - 2 * std::log(2.0)).epsilon(1e-13));
  const double zeta3 = 1.2020569031595942854;
  CHECK(specfun::polygamma(1, 1.0) == doctest::Approx(oracle::kPi * oracle::kPi / 6).epsilon(1e-13));
  CHECK(specfun::polygamma(2, 1.0) == doctest::Approx(-2 * zeta3).epsilon(1e-13));
  CHECK(specfun::polygamma(3, 1.0) == doctest::Approx(std::pow(oracle::kPi, 4) / 15).epsilon(1e-13));
  for (double x : {0.2, 1.7, 9.0, 44.0}) {
    CHECK(specfun::digamma(x + 1) - specfun::digamma(x) == doctest::Approx(1 / x).epsilon(1e-12));
    CHECK(specfun::polygamma(1, x) - specfun::polygamma(1, x + 1) == doctest::Approx(1 / (x * x)).epsilon(1e-12));
  }
}

TEST_CASE("bessel J at half-integer orders") {
  for (double x = 0.01; x < 200.0; x *= 1.13) {
    CHECK(std::abs(specfun::bessel_j(0.5, x) - oracle::bessel_j_half(x)) < 1e-12);
    CHECK(std::abs(specfun::bessel_j(-0.5, x) - oracle::bessel_j_minus_half(x)) < 1e-12);
    CHECK(std::abs(specfun::bessel_j(1.5, x) - oracle::bessel_j_three_halves(x)) < 1e-12);
  }
  CHECK(std::abs(specfun::bessel_j(0.5, oracle::kPi)) < 1e-15);
  CHECK(specfun::bessel_j(0.5, 0.5 * oracle::kPi) == doctest::Approx(2.0 / oracle::kPi).epsilon(1e-14));
}

TEST_CASE("bessel J integer orders against the integral representation") {
  for (int n : {0, 1, 2, 5, 12}) {
    for (double x : {0.0, 0.3, 3.0, 11.9, 12.1, 25.0, 39.0, 41.0, 80.0, 150.0}) {
      CHECK(std::abs(specfun::bessel_j(n, x) - oracle::bessel_j_integer(n, x)) < 1e-12);
    }
  }
}

TEST_CASE("bessel J real orders against Poisson's integral") {
  // The integral cancels badly once x ≫ ν, so each order is checked where
  // the oracle itself is accurate.
  struct Case {
    double nu;
    double x_max;
  };
  for (const Case c : {Case{-0.25, 90.0}, Case{0.3, 90.0}, Case{1.0, 90.0}, Case{2.25, 20.0},
                       Case{4.7, 14.0}, Case{9.5, 14.0}}) {
    for (double x : {0.5, 3.0, 6.0, 11.0, 13.0, 14.0, 20.0, 30.0, 45.0, 90.0}) {
      if (x > c.x_max) continue;
      const double ref = oracle::bessel_j_poisson(c.nu, x);
      CHECK(std::abs(specfun::bessel_j(c.nu, x) - ref) <= 1e-10 * std::max(std::abs(ref), 1e-2));
    }
  }
}

TEST_CASE("bessel J against Boost.Math up to x = 1000") {
  for (double nu : {-0.5, -0.1, 0.0, 0.5, 0.75, 1.25, 2.0, 3.5, 7.3, 15.0, 31.5}) {
    for (double x = 1e-3; x <= 1000.0; x *= 1.07) {
      const double ref = boost::math::cyl_bessel_j(nu, x);
      const double scale = std::max(std::abs(ref), 1e-3 * std::min(1.0, std::sqrt(2.0 / (oracle::kPi * x))));
      CHECK(std::abs(specfun::bessel_j(nu, x) - ref) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("bessel J small-argument law") {
  const double x = 1e-4;
  for (double nu : {-0.5, 0.0, 0.5, 1.5, 4.0}) {
    const double lead = std::pow(0.5 * x, nu) / std::tgamma(nu + 1.0);
    CHECK(std::abs(specfun::bessel_j(nu, x) / lead - 1.0) <= 1e-6);
  }
}

TEST_CASE("bessel J recurrence across regime boundaries") {
  // J_{ν−1} + J_{ν+1} = (2ν/x) J_ν
  for (double nu : {0.7, 1.5, 3.2, 8.0}) {
    for (double x = 0.5; x < 120.0; x += 1.7) {
      const double lhs = specfun::bessel_j(nu - 1, x) + specfun::bessel_j(nu + 1, x);
      const double rhs = 2 * nu / x * specfun::bessel_j(nu, x);
      CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("bessel J domain") {
  CHECK(specfun::bessel_j(0.0, 0.0) == 1.0);
  CHECK(specfun::bessel_j(2.0, 0.0) == 0.0);
  CHECK_THROWS_AS(specfun::bessel_j(-0.75, 1.0), DomainError);
  CHECK_THROWS_AS(specfun::bessel_j(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(specfun::bessel_j(-0.5, 0.0), DomainError);
  CHECK_THROWS_AS(specfun::bessel_j(1.0, std::nan("")), DomainError);
}

TEST_CASE("sin_pi and cos_pi are exact at half-integers") {
  CHECK(specfun::sin_pi(1.0) == 0.0);
  CHECK(specfun::sin_pi(0.5) == 1.0);
  CHECK(specfun::cos_pi(0.5) == 0.0);
  CHECK(specfun::cos_pi(-3.0) == -1.0);
  CHECK(specfun::sin_pi(0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}
