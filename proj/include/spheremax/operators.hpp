#pragma once

#include <vector>

#include "spheremax/grid.hpp"
#include "spheremax/mellin.hpp"
#include "spheremax/varlp.hpp"

namespace spheremax {

/// Pointwise supremum over a finite parameter grid.
struct MaximalResult {
  GridGeometry geometry;
  std::vector<double> values;  // ≥ 0
  std::vector<double> t_grid;
  std::vector<int> argmax_t;   // index into t_grid of the first maximizer

  GridFunction as_grid_function() const;
};

/// (2π|ξ|)^{−α}, 0 < α < n; the mean is annihilated.
GridFunction riesz_potential(const GridFunction& f, double alpha);

/// (2π|ξ|)^{β}, β > 0; the mean is annihilated. Inverse of riesz_potential on
/// mean-zero functions.
GridFunction fractional_laplacian(const GridFunction& f, double beta);

/// (2π|ξ|)^{−iu}; ξ = 0 is mapped with factor 1 so real means are kept.
GridFunction imaginary_power(const GridFunction& f, double u);

/// ‖I_{iu}f‖_{p(·)} / ‖f‖_{p(·)}.
double imaginary_power_norm_ratio(const GridFunction& f, const VariableExponent& p, double u);

/// Symbols shared by the spherical-mean family on a grid of dimension spec.n.
RadialSymbol spherical_mean_symbol(const MultiplierSpec& spec, double t);
RadialSymbol f_star_symbol(const MultiplierSpec& spec, double t);

/// M_t^α f via the symbol F_α(t|ξ|), zero mode F_α(0). Needs ν = n/2+α−1 ≥ −½.
GridFunction spherical_mean(const GridFunction& f, double t, double alpha);

/// The F*_α(t|ξ|) piece of spherical_mean (zero mode 0).
GridFunction f_star_part(const GridFunction& f, double t, double alpha);

/// F_α(0)·e^{−(t|ξ|)²}, zero mode F_α(0).
GridFunction gaussian_part(const GridFunction& f, double t, double alpha);

/// sup over t_grid of |M_t^α f|. Throws PreconditionError for an empty or
/// non-increasing t_grid.
MaximalResult spherical_maximal(const GridFunction& f, double alpha,
                                const std::vector<double>& t_grid);

/// Geometric grid of `points` radii in [L/N, L/2] (N the largest axis size).
std::vector<double> default_t_grid(const GridGeometry& g, int points = 48);

/// Maximum over radii of the mean of |f| on the discrete periodic ball
/// {y : |x − y| ≤ r} (minimum-image metric). radii must start at 0 and
/// increase.
GridFunction hardy_littlewood_maximal(const GridFunction& f, const std::vector<double>& radii);

/// All distinct lattice distances ≤ L/2 in 1D/2D; 0 plus 16 geometric radii
/// in [h, L/2] above that.
std::vector<double> default_radii(const GridGeometry& g);

enum class SmoothingKind { heat, poisson };

/// sup over t of |K_t * |f||, with K_t the symbol e^{−(t|ξ|)²} (heat) or
/// e^{−2πt|ξ|} (Poisson).
MaximalResult smoothing_maximal(const GridFunction& f, SmoothingKind kind,
                                const std::vector<double>& t_grid);

}  // namespace spheremax
