#include "spheremax/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "spheremax/errors.hpp"

namespace spheremax::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_gamma_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

[[noreturn]] void throw_pole(Complex z) {
  std::ostringstream os;
  os << "gamma: pole at z = " << z.real();
  throw DomainError(os.str());
}

// log Γ(z) on Re z >= 1/2, continuous branch.
Complex lanczos_log_gamma(Complex z) {
  const Complex zm1 = z - 1.0;
  Complex series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (zm1 + static_cast<double>(i));
  }
  const Complex t = zm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(t) - t +
         std::log(series);
}

// log sin(πz) without overflow for large |Im z|.
Complex log_sin_pi(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  if (y < 0.0) {
    return std::conj(log_sin_pi(std::conj(z)));
  }
  if (y < 20.0) {
    const Complex s(sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y));
    return std::log(s);
  }
  // sin(πz) = (i/2) e^{-iπz} (1 - e^{2iπz}); the last factor is 1 - O(e^{-2πy}).
  const Complex tiny = std::exp(-2.0 * kPi * y) * Complex(cos_pi(2.0 * x), sin_pi(2.0 * x));
  return Complex(kPi * y + std::log(0.5), -kPi * std::remainder(x, 2.0) + 0.5 * kPi) +
         std::log(1.0 - tiny);
}

Complex log_gamma_unreduced(Complex z) {
  if (z.real() >= 0.5) {
    return lanczos_log_gamma(z);
  }
  const double shift = std::ceil(0.5 - z.real());
  if (shift <= 30.0) {
    Complex acc = 0.0;
    Complex w = z;
    for (int k = 0; k < static_cast<int>(shift); ++k) {
      acc += std::log(w);
      w += 1.0;
    }
    return lanczos_log_gamma(w) - acc;
  }
  return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

// Asymptotic tails for x >= 20.
double digamma_asymptotic(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  return std::log(x) - 0.5 * inv -
         inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 / 132))));
}

double factorial(int m) {
  double r = 1.0;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

// Hankel expansion P cos ω − Q sin ω, valid for x > max(40, ν²).
double bessel_j_hankel(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    const double mag = std::abs(term);
    if (mag > prev) break;  // asymptotic series started diverging
    // a_k contributes to Q for odd k and to P for even k with alternating signs.
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
    if (mag < 1e-17 * std::abs(p)) break;
    prev = mag;
  }
  // ω = x − (ν/2 + 1/4)π; expand to keep the phase exact at quarter orders.
  const double phase = 0.5 * nu + 0.25;
  const double cs = std::cos(x) * cos_pi(phase) + std::sin(x) * sin_pi(phase);
  const double sn = std::sin(x) * cos_pi(phase) - std::cos(x) * sin_pi(phase);
  return std::sqrt(2.0 / (kPi * x)) * (p * cs - q * sn);
}

double bessel_j_series(double nu, double x) {
  const double half = 0.5 * x;
  const double lead = std::exp(nu * std::log(half) - log_gamma(nu + 1.0));
  const double z = -half * half;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= z / (k * (nu + k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return lead * sum;
}

// Miller's algorithm: recur J_{ν+j} downward from a negligible start and
// normalize with (x/2)^ν = Γ(ν+1) Σ_k (ν+2k)/ν ... (Neumann series).
double bessel_j_miller(double nu, double x) {
  int top = static_cast<int>(std::ceil(1.2 * x + 40.0));
  if (top % 2 != 0) ++top;
  std::vector<double> f(static_cast<std::size_t>(top) + 2, 0.0);
  f[top + 1] = 0.0;
  f[top] = 1e-30;
  for (int j = top; j >= 1; --j) {
    f[j - 1] = (2.0 * (nu + j) / x) * f[j] - f[j + 1];
    if (std::abs(f[j - 1]) > 1e250) {
      for (int i = j - 1; i <= top; ++i) f[i] *= 1e-250;
    }
  }
  // ĉ_0 = 1, ĉ_k = (ν+2k) h_k with h_1 = 1, h_{k+1} = h_k (ν+k)/(k+1).
  double norm = f[0];
  double h = 1.0;
  for (int k = 1; 2 * k <= top; ++k) {
    norm += (nu + 2.0 * k) * h * f[2 * k];
    h *= (nu + k) / (k + 1.0);
  }
  const double scale = std::exp(nu * std::log(0.5 * x) - log_gamma(nu + 1.0));
  return f[0] * scale / norm;
}

}  // namespace

double sin_pi(double x) {
  const double t = std::remainder(x, 2.0);  // [-1, 1]
  if (t == 0.0 || t == 1.0 || t == -1.0) return 0.0;
  if (t == 0.5) return 1.0;
  if (t == -0.5) return -1.0;
  if (t > 0.5) return std::sin(kPi * (1.0 - t));
  if (t < -0.5) return std::sin(kPi * (-1.0 - t));
  return std::sin(kPi * t);
}

double cos_pi(double x) {
  const double t = std::abs(std::remainder(x, 2.0));  // [0, 1]
  if (t == 0.5) return 0.0;
  if (t == 0.0) return 1.0;
  if (t == 1.0) return -1.0;
  if (t > 0.5) return -std::cos(kPi * (1.0 - t));
  return std::cos(kPi * t);
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("gamma: non-finite argument");
  }
  if (is_gamma_pole(z)) throw_pole(z);
  Complex r = log_gamma_unreduced(z);
  double im = std::remainder(r.imag(), 2.0 * kPi);
  if (im <= -kPi) im += 2.0 * kPi;
  return {r.real(), im};
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

double log_gamma(double x) { return log_gamma(Complex(x, 0.0)).real(); }

double gamma(double x) {
  if (x > 0.0) return std::exp(log_gamma(x));
  return gamma(Complex(x, 0.0)).real();
}

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("digamma: argument must be positive and finite");
  }
  double acc = 0.0;
  while (x < 20.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  return acc + digamma_asymptotic(x);
}

double polygamma(int m, double x) {
  if (m == 0) return digamma(x);
  if (m < 0 || !(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("polygamma: need m >= 0 and finite x > 0");
  }
  const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
  const double mfact = factorial(m);
  double acc = 0.0;
  while (x < 20.0) {
    acc += std::pow(x, -(m + 1));
    x += 1.0;
  }
  // ψ^{(m)}(x) = ψ^{(m)}(x+K) − (−1)^m m! Σ x_j^{−m−1}
  acc *= -((m % 2 == 0) ? 1.0 : -1.0) * mfact;

  static constexpr std::array<double, 6> kBernoulli = {
      1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
  double tail = factorial(m - 1) / std::pow(x, m) + mfact / (2.0 * std::pow(x, m + 1));
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    const int twok = static_cast<int>(2 * k);
    tail += kBernoulli[k - 1] * factorial(twok + m - 1) / (factorial(twok) * std::pow(x, twok + m));
  }
  return acc + sign * tail;
}

double bessel_j(double nu, double x) {
  if (!std::isfinite(nu) || !std::isfinite(x)) {
    throw DomainError("bessel_j: non-finite argument");
  }
  if (nu < -0.5) {
    std::ostringstream os;
    os << "bessel_j: order " << nu << " below -1/2";
    throw DomainError(os.str());
  }
  if (x < 0.0) throw DomainError("bessel_j: negative argument");
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    throw DomainError("bessel_j: J_nu(0) is unbounded for nu < 0");
  }
  if (x <= 12.0) return bessel_j_series(nu, x);
  if (x > std::max(40.0, nu * nu)) return bessel_j_hankel(nu, x);
  return bessel_j_miller(nu, x);
}

}  // namespace spheremax::specfun
