#include "spheremax/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "spheremax/errors.hpp"

namespace spheremax {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

MultiplierSpec spec_for(const GridFunction& f, double alpha) {
  MultiplierSpec spec{alpha, f.geometry().dim};
  spec.validate();
  return spec;
}

// Bessel/Gamma failures inside a symbol surface as multiplier errors.
RadialSymbol guarded(RadialSymbol inner) {
  return [inner = std::move(inner)](double radius) -> Complex {
    try {
      return inner(radius);
    } catch (const DomainError& e) {
      throw MultiplierError(std::string("multiplier: ") + e.what(), radius);
    }
  };
}

void require_increasing(const std::vector<double>& grid, const char* what, bool allow_zero) {
  if (grid.empty()) throw PreconditionError(std::string(what) + ": grid must be nonempty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || grid[i] < 0.0 || (!allow_zero && grid[i] == 0.0)) {
      throw PreconditionError(std::string(what) + ": values must be finite and positive");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw PreconditionError(std::string(what) + ": grid must be strictly increasing");
    }
  }
}

MaximalResult sup_over(const Spectrum& spectrum, const std::vector<double>& t_grid,
                       const std::function<GridFunction(const Spectrum&, double)>& apply) {
  MaximalResult result;
  result.geometry = spectrum.coefficients().geometry();
  result.t_grid = t_grid;
  const std::size_t count = result.geometry.point_count();
  result.values.assign(count, 0.0);
  result.argmax_t.assign(count, 0);
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    const GridFunction g = apply(spectrum, t_grid[k]);
    for (std::size_t i = 0; i < count; ++i) {
      const double v = std::abs(g[i]);
      if (k == 0 || v > result.values[i]) {
        result.values[i] = v;
        result.argmax_t[i] = static_cast<int>(k);
      }
    }
  }
  return result;
}

}  // namespace

GridFunction MaximalResult::as_grid_function() const {
  return GridFunction::from_real(geometry, values);
}

GridFunction riesz_potential(const GridFunction& f, double alpha) {
  const int n = f.geometry().dim;
  if (!(alpha > 0.0 && alpha < n)) throw PreconditionError("riesz_potential: need 0 < alpha < n");
  return apply_radial_multiplier(
      f, [alpha](double r) { return Complex(std::pow(kTwoPi * r, -alpha)); }, 0.0);
}

GridFunction fractional_laplacian(const GridFunction& f, double beta) {
  if (!(beta > 0.0)) throw PreconditionError("fractional_laplacian: need beta > 0");
  return apply_radial_multiplier(
      f, [beta](double r) { return Complex(std::pow(kTwoPi * r, beta)); }, 0.0);
}

GridFunction imaginary_power(const GridFunction& f, double u) {
  if (!std::isfinite(u)) throw PreconditionError("imaginary_power: u must be finite");
  if (u == 0.0) return f;  // I_0 is the identity; skip the transform round trip
  return apply_radial_multiplier(
      f,
      [u](double r) {
        const double phase = -u * std::log(kTwoPi * r);
        return Complex(std::cos(phase), std::sin(phase));
      },
      1.0);
}

double imaginary_power_norm_ratio(const GridFunction& f, const VariableExponent& p, double u) {
  const double denom = luxemburg_norm(f, p);
  if (!(denom > 0.0)) throw PreconditionError("norm ratio: f must be nonzero");
  return luxemburg_norm(imaginary_power(f, u), p) / denom;
}

RadialSymbol spherical_mean_symbol(const MultiplierSpec& spec, double t) {
  if (!(t > 0.0)) throw PreconditionError("spherical_mean: t must be > 0");
  spec.validate();
  return guarded([spec, t](double r) { return Complex(f_alpha(t * r, spec)); });
}

RadialSymbol f_star_symbol(const MultiplierSpec& spec, double t) {
  if (!(t > 0.0)) throw PreconditionError("f_star_part: t must be > 0");
  spec.validate();
  return guarded([spec, t](double r) { return Complex(f_star(t * r, spec)); });
}

GridFunction spherical_mean(const GridFunction& f, double t, double alpha) {
  const auto spec = spec_for(f, alpha);
  return apply_radial_multiplier(f, spherical_mean_symbol(spec, t), f_alpha_at_zero(spec));
}

GridFunction f_star_part(const GridFunction& f, double t, double alpha) {
  const auto spec = spec_for(f, alpha);
  return apply_radial_multiplier(f, f_star_symbol(spec, t), 0.0);
}

GridFunction gaussian_part(const GridFunction& f, double t, double alpha) {
  if (!(t > 0.0)) throw PreconditionError("gaussian_part: t must be > 0");
  const auto spec = spec_for(f, alpha);
  const double f0 = f_alpha_at_zero(spec);
  return apply_radial_multiplier(
      f, [f0, t](double r) { return Complex(f0 * std::exp(-(t * r) * (t * r))); }, f0);
}

MaximalResult spherical_maximal(const GridFunction& f, double alpha,
                                const std::vector<double>& t_grid) {
  require_increasing(t_grid, "spherical_maximal", false);
  const auto spec = spec_for(f, alpha);
  const double f0 = f_alpha_at_zero(spec);
  const Spectrum spectrum(f);
  return sup_over(spectrum, t_grid, [&](const Spectrum& s, double t) {
    return s.apply(spherical_mean_symbol(spec, t), f0);
  });
}

std::vector<double> default_t_grid(const GridGeometry& g, int points) {
  g.validate();
  if (points < 1) throw PreconditionError("default_t_grid: need at least one point");
  const int n = *std::max_element(g.sizes.begin(), g.sizes.end());
  const double lo = g.side / n;
  const double hi = 0.5 * g.side;
  std::vector<double> out(static_cast<std::size_t>(points));
  if (points == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, double(i) / (points - 1));
  return out;
}

namespace {

struct BallOffset {
  double distance;
  std::vector<int> delta;
};

std::vector<BallOffset> ball_offsets(const GridGeometry& g, double r_max) {
  std::vector<BallOffset> offsets;
  const std::size_t count = g.point_count();
  for (std::size_t i = 0; i < count; ++i) {
    auto idx = g.unravel(i);
    double d2 = 0.0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      idx[a] = signed_frequency(idx[a], g.sizes[a]);  // offset in [−N/2, N/2)
      const double d = std::abs(idx[a]) * g.spacing(static_cast<int>(a));
      d2 += d * d;
    }
    const double dist = std::sqrt(d2);
    if (dist <= r_max * (1.0 + 1e-12)) offsets.push_back({dist, std::move(idx)});
  }
  std::stable_sort(offsets.begin(), offsets.end(),
                   [](const BallOffset& a, const BallOffset& b) { return a.distance < b.distance; });
  return offsets;
}

}  // namespace

GridFunction hardy_littlewood_maximal(const GridFunction& f, const std::vector<double>& radii) {
  require_increasing(radii, "hardy_littlewood_maximal", true);
  if (radii.front() != 0.0) {
    throw PreconditionError("hardy_littlewood_maximal: radii must include 0 first");
  }
  const auto& g = f.geometry();
  const auto offsets = ball_offsets(g, radii.back());

  // Number of offsets inside each radius.
  std::vector<std::size_t> cutoffs;
  cutoffs.reserve(radii.size());
  std::size_t pos = 0;
  for (double r : radii) {
    while (pos < offsets.size() && offsets[pos].distance <= r * (1.0 + 1e-12)) ++pos;
    cutoffs.push_back(pos);
  }

  const auto mags = f.abs_values();
  const std::size_t count = g.point_count();
  std::vector<double> out(count, 0.0);
  std::vector<int> target(static_cast<std::size_t>(g.dim));
  for (std::size_t i = 0; i < count; ++i) {
    const auto base = g.unravel(i);
    double sum = 0.0;
    std::size_t included = 0;
    double best = 0.0;
    for (std::size_t c : cutoffs) {
      for (; included < c; ++included) {
        std::size_t linear = 0;
        for (std::size_t a = 0; a < base.size(); ++a) {
          const int n = g.sizes[a];
          const int j = ((base[a] + offsets[included].delta[a]) % n + n) % n;
          linear = linear * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
        }
        sum += mags[linear];
      }
      best = std::max(best, sum / static_cast<double>(included));
    }
    out[i] = best;
  }
  return GridFunction::from_real(g, out);
}

std::vector<double> default_radii(const GridGeometry& g) {
  g.validate();
  const double half = 0.5 * g.side;
  if (g.dim <= 2) {
    std::set<double> distinct;
    for (const auto& o : ball_offsets(g, half)) distinct.insert(o.distance);
    return {distinct.begin(), distinct.end()};
  }
  const int n = *std::max_element(g.sizes.begin(), g.sizes.end());
  const double h = g.side / n;
  std::vector<double> out{0.0};
  for (int i = 0; i < 16; ++i) out.push_back(h * std::pow(half / h, i / 15.0));
  return out;
}

MaximalResult smoothing_maximal(const GridFunction& f, SmoothingKind kind,
                                const std::vector<double>& t_grid) {
  require_increasing(t_grid, "smoothing_maximal", false);
  const auto mags = f.abs_values();
  const Spectrum spectrum(GridFunction::from_real(f.geometry(), mags));
  return sup_over(spectrum, t_grid, [kind](const Spectrum& s, double t) {
    if (kind == SmoothingKind::heat) {
      return s.apply([t](double r) { return Complex(std::exp(-(t * r) * (t * r))); }, 1.0);
    }
    return s.apply([t](double r) { return Complex(std::exp(-kTwoPi * t * r)); }, 1.0);
  });
}

}  // namespace spheremax
