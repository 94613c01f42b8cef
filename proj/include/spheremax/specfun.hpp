#pragma once

#include <complex>

namespace spheremax::specfun {

using Complex = std::complex<double>;

/// Principal value Log(Γ(z)), imaginary part reduced to (−π, π].
///
/// Lanczos (g = 7, 9 terms) on Re z ≥ ½; upward recurrence for moderate
/// Re z < ½ and the reflection formula further left. Relative accuracy of
/// exp(log_gamma(z)) is about 1e−14 for |z| ≤ 50 and stays near 1e−12 on
/// vertical lines out to |Im z| ~ 1e3.
///
/// Throws DomainError at the poles z = 0, −1, −2, ….
Complex log_gamma(Complex z);

/// Γ(z) = exp(log_gamma(z)); same pole contract.
Complex gamma(Complex z);

/// Real-argument conveniences used on the multiplier hot paths.
double log_gamma(double x);  // log|Γ(x)|
double gamma(double x);

/// ψ(x) for real x > 0.
double digamma(double x);

/// ψ^{(m)}(x) for real x > 0, m ≥ 1.
double polygamma(int m, double x);

/// Bessel function of the first kind J_ν(x), ν ≥ −½, x ≥ 0.
///
/// Ascending series for x ≤ 12, Hankel's asymptotic expansion for
/// x > max(40, ν²), and Miller's backward recurrence (normalized through
/// the Neumann series for (x/2)^ν) in between.
///
/// Throws DomainError for ν < −½, x < 0, non-finite input, or x = 0 with
/// ν < 0 (J_ν is unbounded there).
double bessel_j(double nu, double x);

/// sin(πx) and cos(πx), exact at multiples of ½.
double sin_pi(double x);
double cos_pi(double x);

}  // namespace spheremax::specfun
