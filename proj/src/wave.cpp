#include "spheremax/wave.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "spheremax/csv.hpp"
#include "spheremax/errors.hpp"
#include "spheremax/hypotheses.hpp"
#include "spheremax/operators.hpp"
#include "spheremax/specfun.hpp"

namespace spheremax {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dimension(const GridFunction& f, const WaveConfig& cfg) {
  if (f.geometry().dim != cfg.n) {
    throw PreconditionError("wave: grid dimension " + std::to_string(f.geometry().dim) +
                            " does not match n = " + std::to_string(cfg.n));
  }
}

double gradient_energy(const Spectrum& s) {
  const auto& lattice = s.lattice();
  const auto coeff = s.coefficients().samples();
  double sum = 0.0;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    const double w = 2.0 * kPi * lattice.radius(i);
    sum += w * w * std::norm(coeff[i]);
  }
  return sum * s.coefficients().geometry().cell_volume();
}

}  // namespace

WaveConfig make_wave_config(int n, std::vector<double> t_grid) {
  if (n < 1 || n > 4) throw PreconditionError("wave: n must be in 1..4");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0) || !std::isfinite(t_grid[i]) || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
      throw PreconditionError("wave: t_grid must be positive and strictly increasing");
    }
  }
  WaveConfig cfg;
  cfg.n = n;
  cfg.alpha = 0.5 * (3 - n);
  cfg.c_n = specfun::gamma(1.5) / std::pow(kPi, 0.5 * n);
  cfg.t_grid = std::move(t_grid);
  return cfg;
}

std::vector<double> default_wave_t_grid(const GridGeometry& g) {
  g.validate();
  const int n = *std::max_element(g.sizes.begin(), g.sizes.end());
  const double lo = g.side / (2.0 * n);
  const double hi = 0.5 * g.side;
  std::vector<double> out(64);
  for (int i = 0; i < 64; ++i) out[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, i / 63.0);
  return out;
}

GridFunction wave_propagate(const GridFunction& f, double t, const WaveConfig& cfg) {
  require_dimension(f, cfg);
  if (!(t >= 0.0)) throw PreconditionError("wave_propagate: t must be >= 0");
  if (t == 0.0) return GridFunction::zeros(f.geometry());
  return spherical_mean(f, t, cfg.alpha).scaled(cfg.c_n * t);
}

GridFunction wave_velocity(const GridFunction& f, double t, const WaveConfig& cfg) {
  require_dimension(f, cfg);
  if (!(t >= 0.0)) throw PreconditionError("wave_velocity: t must be >= 0");
  return apply_radial_multiplier(
      f, [t](double r) { return Complex(std::cos(2.0 * kPi * t * r)); }, 1.0);
}

double wave_energy(const GridFunction& f, double t, const WaveConfig& cfg) {
  const double kinetic = std::pow(wave_velocity(f, t, cfg).l2_norm(), 2);
  return kinetic + gradient_energy(Spectrum(wave_propagate(f, t, cfg)));
}

GridFunction darboux_solution(const GridFunction& f, double t, const WaveConfig& cfg) {
  require_dimension(f, cfg);
  if (!(t >= 0.0)) throw PreconditionError("darboux_solution: t must be >= 0");
  if (t == 0.0) return f;
  return spherical_mean(f, t, cfg.alpha).scaled(cfg.c_n);
}

double fd_stability_bound(const GridGeometry& g) {
  g.validate();
  double h = g.spacing(0);
  for (int a = 1; a < g.dim; ++a) h = std::min(h, g.spacing(a));
  return h / (2.0 * kPi * std::sqrt(static_cast<double>(g.dim)));
}

GridFunction wave_fd_oracle(const GridFunction& f, double t, double dt) {
  if (!(t > 0.0)) throw PreconditionError("wave_fd_oracle: t must be > 0");
  if (!(dt > 0.0)) throw PreconditionError("wave_fd_oracle: dt must be > 0");
  const double bound = fd_stability_bound(f.geometry());
  if (dt > bound) {
    throw PreconditionError("wave_fd_oracle: dt = " + format_number(dt) +
                            " exceeds the stability bound " + format_number(bound));
  }
  const long steps = std::max(1L, static_cast<long>(std::ceil(t / dt - 1e-9)));
  const double step = t / static_cast<double>(steps);

  // Δ is diagonal in frequency, so each mode is stepped independently.
  const Spectrum s(f);
  const auto fhat = s.coefficients().samples();
  const std::size_t count = fhat.size();
  std::vector<double> lap(count);  // −(2π|ξ|)²
  for (std::size_t i = 0; i < count; ++i) {
    const double w = 2.0 * kPi * s.lattice().radius(i);
    lap[i] = -w * w;
  }
  std::vector<Complex> prev(count, 0.0), cur(count), next(count);
  for (std::size_t i = 0; i < count; ++i) {
    cur[i] = step * fhat[i] + step * step * step / 6.0 * lap[i] * fhat[i];
  }
  double f_energy = 0.0;
  for (const auto& c : fhat) f_energy += std::norm(c);
  const double limit = 100.0 * t * t * f_energy;  // (10·t·‖f‖)² in coefficient units

  for (long k = 1; k < steps; ++k) {
    double e = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      next[i] = 2.0 * cur[i] - prev[i] + step * step * lap[i] * cur[i];
      e += std::norm(next[i]);
    }
    if (!(e <= limit) && f_energy > 0.0) {
      throw NumericalError("wave_fd_oracle: solution norm grew past 10 t ||f||");
    }
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return dft_inverse(GridFunction(f.geometry(), std::move(cur), Domain::frequency));
}

double a_priori_ratio(const GridFunction& f, const VariableExponent& p, const WaveConfig& cfg) {
  require_dimension(f, cfg);
  if (cfg.t_grid.empty()) throw PreconditionError("a_priori_ratio: t_grid must be nonempty");
  const auto report = check_bound_hypotheses(p, cfg.alpha, cfg.n, BoundClaim::cor36_wave);
  if (!report.pass) {
    throw PreconditionError("a_priori_ratio: hypotheses fail: " + report.summary_line());
  }
  if (!(p.geometry() == f.geometry())) {
    throw PreconditionError("a_priori_ratio: exponent and data grids differ");
  }
  // |u(·,t)|/t = c_n |M_t^α f|, so the sup is a scaled spherical maximal function.
  const auto sup = spherical_maximal(f, cfg.alpha, cfg.t_grid);
  std::vector<double> scaled(sup.values.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = cfg.c_n * sup.values[i];
  const double denom = luxemburg_norm(f, p);
  if (!(denom > 0.0)) throw PreconditionError("a_priori_ratio: f must be nonzero");
  return luxemburg_norm(scaled, p) / denom;
}

double small_time_limit_error(const GridFunction& f, const WaveConfig& cfg, double t) {
  if (!(t > 0.0)) throw PreconditionError("small_time_limit_error: t must be > 0");
  return wave_propagate(f, t, cfg).scaled(1.0 / t).minus(f).max_abs();
}

std::vector<WaveTraceRow> wave_trace(const GridFunction& f, const WaveConfig& cfg) {
  std::vector<WaveTraceRow> rows;
  rows.reserve(cfg.t_grid.size());
  for (double t : cfg.t_grid) {
    const auto u = wave_propagate(f, t, cfg);
    const double kinetic = std::pow(wave_velocity(f, t, cfg).l2_norm(), 2);
    rows.push_back({t, u.l2_norm(), u.max_abs(), kinetic + gradient_energy(Spectrum(u))});
  }
  return rows;
}

void write_wave_trace_rows(std::ostream& out, const std::vector<WaveTraceRow>& rows) {
  for (const auto& r : rows) {
    out << csv_number(r.t) << ',' << csv_number(r.l2_norm) << ',' << csv_number(r.max_norm) << ','
        << csv_number(r.energy) << '\n';
  }
}

}  // namespace spheremax
