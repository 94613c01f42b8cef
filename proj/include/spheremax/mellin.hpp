#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace spheremax {

using Complex = std::complex<double>;

/// (α, n) of the multiplier F_α(λ) = π^{1−α} λ^{−ν} J_ν(2πλ), ν = n/2 + α − 1.
struct MultiplierSpec {
  double alpha = 0.0;
  int n = 3;

  double order() const { return 0.5 * n + alpha - 1.0; }  // ν
  double shifted() const { return alpha + 0.5 * n; }      // a = α + n/2

  /// n ≥ 1 and ν ≥ −½; throws PreconditionError otherwise.
  void validate() const;
  /// 1 − n/2 < α < 1, the range of the boundedness results.
  bool in_mellin_range() const;
};

/// Symbol of the order-α spherical mean; F_α(0) = π^{n/2}/Γ(n/2+α).
double f_alpha(double lambda, const MultiplierSpec& spec);
double f_alpha_at_zero(const MultiplierSpec& spec);

/// F*_α(λ) = F_α(λ) − F_α(0)e^{−λ²}; exactly 0 at λ = 0.
double f_star(double lambda, const MultiplierSpec& spec);

/// Mellin coefficients of F*_α, A(u) = (1/2π)∫₀^∞ F*_α(λ) λ^{−1−iu} dλ, in
/// closed form:
///
///   A(u) = π^{n/2−1}/4 · Γ(−iu/2) · [π^{iu}/Γ(a + iu/2) − 1/Γ(a)],  a = α + n/2.
///
/// The removable singularity at u = 0 is evaluated by a fourth-order series
/// for |u| < 1e−3. Large-|u| values are assembled in log space.
Complex a_alpha_closed(double u, const MultiplierSpec& spec);

/// The variant with prefactor Γ(a−½)/(4√π) and phase 2^{−iu} that appears in
/// the literature this toolkit reproduces. It is NOT the Mellin transform of
/// F*_α as normalized here (see a_alpha_closed); kept for comparison tables.
/// Throws DomainError when a − ½ is a pole of Γ.
Complex a_alpha_cited(double u, const MultiplierSpec& spec);

struct QuadratureOptions {
  double s_max = 20.0;
  int steps = 200000;
  double tolerance = 1e-6;  // target used for the accuracy warning
};

struct QuadratureResult {
  Complex value;
  double tail_bound = 0.0;  // analytic bound on the truncated tails
  bool accuracy_warning = false;
};

/// A(u) by λ = e^s and the composite trapezoid rule on [−s_max, s_max].
/// Tails are bounded by the λ^{−(n−1)/2−α} Bessel envelope at +∞ and the λ²
/// behaviour of F*_α at 0; the warning flag is raised when that bound
/// exceeds 10× the tolerance. Throws PreconditionError for s_max ≤ 0 or
/// fewer than 1000 steps.
QuadratureResult a_alpha_quadrature(double u, const MultiplierSpec& spec,
                                    const QuadratureOptions& options = {});

/// Trapezoid approximation of ∫_{−u_max}^{u_max} A(u) λ^{iu} du. The imaginary
/// part is returned too; it vanishes up to round-off by conjugate symmetry.
Complex mellin_reconstruct_complex(double lambda, const MultiplierSpec& spec,
                                   double u_max = 200.0, double du = 0.01);
double mellin_reconstruct(double lambda, const MultiplierSpec& spec, double u_max = 200.0,
                          double du = 0.01);

/// Least-squares slope of log|A(u)| against log(1+u) on `points`
/// geometrically spaced u in [u_lo, u_hi]. Requires 10 ≤ u_lo < u_hi.
double decay_exponent_fit(const MultiplierSpec& spec, double u_lo, double u_hi, int points);

/// Integrand exponent −α − n/2 + θn/2 + θδ of the interpolated bound and
/// whether ∫(1+|u|)^e du converges (e < −1); integral = 2/(−e−1) when it does.
struct IntegrabilityReport {
  double exponent = 0.0;
  bool integrable = false;
  double integral = 0.0;
};
IntegrabilityReport interpolation_integrability(const MultiplierSpec& spec, double theta,
                                                double delta);

enum class MellinMethod { closed, quadrature, cited };
std::string method_name(MellinMethod m);

struct MellinTable {
  MultiplierSpec spec;
  std::vector<double> u_grid;
  std::vector<Complex> values;
  MellinMethod method = MellinMethod::closed;
};

MellinTable build_mellin_table(const MultiplierSpec& spec, std::vector<double> u_grid,
                               MellinMethod method, const QuadratureOptions& options = {});

/// Rows u, re_A, im_A, abs_A, method, alpha, n (no header).
void write_mellin_rows(std::ostream& out, const MellinTable& table);

}  // namespace spheremax
