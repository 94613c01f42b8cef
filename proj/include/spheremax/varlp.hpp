#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "spheremax/grid.hpp"

namespace spheremax {

inline constexpr double kInfiniteExponent = std::numeric_limits<double>::infinity();

/// Exponent field p(x) ∈ [1, ∞] on a grid, plus the limit value p_∞ used by
/// the decay diagnostics. Infinite samples mark the L^∞ region.
class VariableExponent {
 public:
  VariableExponent(GridGeometry geometry, std::vector<double> samples, double p_infinity);

  static VariableExponent constant(const GridGeometry& geometry, double q);

  /// p(x) from a function of the centered coordinate.
  static VariableExponent from_function(const GridGeometry& geometry,
                                        const std::function<double(std::span<const double>)>& p,
                                        double p_infinity);

  const GridGeometry& geometry() const noexcept { return geometry_; }
  std::span<const double> samples() const noexcept { return samples_; }
  double operator[](std::size_t i) const { return samples_[i]; }
  std::size_t size() const noexcept { return samples_.size(); }
  double p_infinity() const noexcept { return p_infinity_; }

  /// Extremes over the finite region (∞ when the region is empty).
  double p_minus() const noexcept { return p_minus_; }
  double p_plus() const noexcept { return p_plus_; }
  bool has_infinite_region() const noexcept { return has_infinite_; }

 private:
  GridGeometry geometry_;
  std::vector<double> samples_;
  double p_infinity_;
  double p_minus_ = kInfiniteExponent;
  double p_plus_ = kInfiniteExponent;
  bool has_infinite_ = false;
};

// Named exponent builders. All vary along the centered chart.
VariableExponent exponent_sine(const GridGeometry& g, double mean, double amplitude);
VariableExponent exponent_step(const GridGeometry& g, double low, double high);
VariableExponent exponent_radial(const GridGeometry& g, double inner, double outer, double width);

/// Parse "const:q", "sine:mean:amp", "step:low:high", "radial:inner:outer:width".
VariableExponent exponent_from_builder(const GridGeometry& g, const std::string& spec);

/// ρ(f/λ): Riemann sum of (|f|/λ)^{p(x)} over the finite region plus the
/// sup of |f|/λ over the infinite region.
double modular(const GridFunction& f, const VariableExponent& p, double lambda);

/// Same, from precomputed magnitudes.
double modular(std::span<const double> magnitudes, const VariableExponent& p, double lambda);

/// inf{λ > 0 : ρ(f/λ) ≤ 1} by bracketing and bisection to a relative bracket
/// width of rel_tol. Returns 0 for f ≡ 0.
double luxemburg_norm(const GridFunction& f, const VariableExponent& p, double rel_tol = 1e-12);
double luxemburg_norm(std::span<const double> magnitudes, const VariableExponent& p,
                      double rel_tol = 1e-12);

/// 1/p + 1/p′ = 1 pointwise, with 1 ↔ ∞.
VariableExponent dual_exponent(const VariableExponent& p);

struct LogHolderEstimate {
  double local = 0.0;  // max |1/p(x)−1/p(y)|·log(e+1/|x−y|), |x−y| < ½
  double decay = 0.0;  // max |1/p(x)−1/p_∞|·log(e+|x|)
};

/// Brute-force log-Hölder constants over all grid pairs (torus distance).
/// Throws DomainError if p has an infinite region; PreconditionError for grids
/// above 2^14 points.
LogHolderEstimate log_holder_constants(const VariableExponent& p);

/// Refinement diagnostic: a log-Hölder exponent keeps its local constant
/// within rel_tol when the grid is refined; a jump makes it grow like log N.
bool log_holder_stable(const LogHolderEstimate& coarse, const LogHolderEstimate& fine,
                       double rel_tol = 0.1);

/// Interpolation data for 1/p = (1−θ)/2 + θ/p̃.
struct ExponentTransform {
  double theta = 0.0;
  double theta0 = 0.0;
  double delta = 0.0;
  std::vector<double> r;  // 1/p(x) − ½
  VariableExponent p_tilde;
  double alpha = 0.0;
  int n = 0;

  /// max_x |1/p(x) − (1−θ)/2 − θ/p̃(x)|.
  double identity_residual(const VariableExponent& p) const;
};

/// Deterministic interpolation witness: δ is half the smaller
/// slack of inf r and sup r against ±(½ − 1/n + α/n), θ₀ = δ and
/// θ = 1 − 2/n + 2α/n − θ₀. Throws PreconditionError if α ∉ (1−n/2, 1) or
/// the exponent leaves (n/(n−1+α), n/(1−α)).
ExponentTransform exponent_transform(const VariableExponent& p, double alpha, int n);

}  // namespace spheremax
