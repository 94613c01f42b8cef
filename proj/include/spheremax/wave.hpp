#pragma once

#include <iosfwd>
#include <vector>

#include "spheremax/grid.hpp"
#include "spheremax/mellin.hpp"
#include "spheremax/varlp.hpp"

namespace spheremax {

/// Wave setup in dimension n: α = (3−n)/2 makes the Bessel order ½ for every
/// n, and c_n = Γ(3/2)/π^{n/2} = 1/F_α(0).
struct WaveConfig {
  int n = 3;
  double alpha = 0.0;
  double c_n = 0.0;
  std::vector<double> t_grid;

  MultiplierSpec spec() const { return {alpha, n}; }
  /// n = 1 runs but lies outside the range of the boundedness results.
  bool smoke_only() const { return n < 2; }
};

/// Throws PreconditionError unless 1 ≤ n ≤ 4 and t_grid (if given) is
/// strictly increasing and positive.
WaveConfig make_wave_config(int n, std::vector<double> t_grid = {});

/// 64 geometric points in [L/(2N), L/2].
std::vector<double> default_wave_t_grid(const GridGeometry& g);

/// u(·,t) = c_n t M_t^α f, the solution of u_tt = Δu with u(0) = 0, u_t(0) = f.
/// t = 0 returns zeros.
GridFunction wave_propagate(const GridFunction& f, double t, const WaveConfig& cfg);

/// ∂_t u(·,t), symbol cos(2πt|ξ|); independent of the spherical means.
GridFunction wave_velocity(const GridFunction& f, double t, const WaveConfig& cfg);

/// ‖∂_t u‖₂² + ‖∇u‖₂² with the spectral gradient and cell-volume weights.
double wave_energy(const GridFunction& f, double t, const WaveConfig& cfg);

/// u(·,t) = c_n M_t^α f solving u_tt + (2/t)u_t = Δu with u(0) = f.
GridFunction darboux_solution(const GridFunction& f, double t, const WaveConfig& cfg);

/// Stability limit (min spacing)/(2π√n) of wave_fd_oracle.
double fd_stability_bound(const GridGeometry& g);

/// Leapfrog u^{k+1} = 2u^k − u^{k−1} + dt²Δu^k, Δ applied spectrally, started
/// from u⁰ = 0 and the Taylor step u¹ = dt·f + dt³/6·Δf. The step is shrunk
/// to t/⌈t/dt⌉ so the final time is hit exactly. Throws PreconditionError when
/// dt exceeds the stability bound and NumericalError if the L² norm grows
/// past 10·t·‖f‖₂.
GridFunction wave_fd_oracle(const GridFunction& f, double t, double dt);

/// ‖sup_t |u(·,t)|/t‖_{p(·)} / ‖f‖_{p(·)} over cfg.t_grid. Throws
/// PreconditionError if the cor36_wave hypotheses fail for p.
double a_priori_ratio(const GridFunction& f, const VariableExponent& p, const WaveConfig& cfg);

/// max |u(·,t)/t − f|, t > 0.
double small_time_limit_error(const GridFunction& f, const WaveConfig& cfg, double t);

struct WaveTraceRow {
  double t = 0.0;
  double l2_norm = 0.0;
  double max_norm = 0.0;
  double energy = 0.0;
};

std::vector<WaveTraceRow> wave_trace(const GridFunction& f, const WaveConfig& cfg);

/// Rows t, l2_norm, max_norm, energy (no header).
void write_wave_trace_rows(std::ostream& out, const std::vector<WaveTraceRow>& rows);

}  // namespace spheremax
