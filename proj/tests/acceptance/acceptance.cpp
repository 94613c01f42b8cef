// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "spheremax/hypotheses.hpp"
#include "spheremax/mellin.hpp"
#include "spheremax/operators.hpp"
#include "spheremax/varlp.hpp"
#include "spheremax/wave.hpp"

using namespace spheremax;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates checks; the first few failures are kept for the report line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) {
      ++failed_;
      if (failed_ <= 3) failures_ += (failures_.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  Outcome outcome() const {
    std::ostringstream d;
    d << count_ - failed_ << "/" << count_ << " checks";
    if (!notes_.empty()) d << ", " << notes_;
    if (failed_ > 0) d << "; failed: " << failures_;
    return {failed_ == 0, d.str()};
  }

 private:
  int count_ = 0;
  int failed_ = 0;
  std::string failures_;
  std::string notes_;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7g", v);
  return buf;
}

GridFunction constant(const GridGeometry& g, double c) {
  return GridFunction::from_real(g, std::vector<double>(g.point_count(), c));
}

double classical_norm(const GridFunction& f, double q) {
  double s = 0.0;
  for (const auto& z : f.samples()) s += std::pow(std::abs(z), q);
  return std::pow(s * f.geometry().cell_volume(), 1.0 / q);
}

// 1. ‖I_{iu} f‖₂ = ‖f‖₂.
Outcome plancherel() {
  Checker c;
  const std::vector<GridGeometry> grids{GridGeometry::cube(1, 1024), GridGeometry::cube(2, 128),
                                        GridGeometry::cube(3, 32)};
  double worst = 0.0;
  for (const auto& g : grids) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto f = random_band_limited(g, seed, g.sizes[0] / 4.0);
      const double norm = f.l2_norm();
      for (double u : {0.5, -0.5, 7.3, -7.3, 100.0, -100.0}) {
        const double dev = std::abs(imaginary_power(f, u).l2_norm() / norm - 1.0);
        worst = std::max(worst, dev);
        c.expect(dev <= 1e-12, "dim " + std::to_string(g.dim) + " u=" + num(u));
      }
    }
  }
  c.note("max deviation " + num(worst));
  return c.outcome();
}

// 2. F_0 for n = 3 is sin(2πλ)/λ.
Outcome closed_form_collapse() {
  Checker c;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> dist(0.0, 10.0);
  const MultiplierSpec spec{0.0, 3};
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double lambda = dist(rng);
    if (lambda == 0.0) lambda = 10.0;
    const double dev = std::abs(f_alpha(lambda, spec) - std::sin(2 * kPi * lambda) / lambda);
    worst = std::max(worst, dev);
    c.expect(dev <= 1e-10, "lambda=" + num(lambda));
  }
  c.note("max error " + num(worst));
  return c.outcome();
}

// 3. F_α(0) equals the unit-ball mass of m_α.
Outcome mass_consistency() {
  Checker c;
  for (const auto& [n, alpha] : std::vector<std::pair<int, double>>{{2, 0.5}, {3, 0.5}, {3, 1.0}}) {
    const double closed = f_alpha_at_zero({alpha, n});
    const double mass = oracle::ball_mass(n, alpha);
    c.expect(std::abs(closed - mass) <= 1e-6, "(" + std::to_string(n) + "," + num(alpha) + ")");
    c.note("(" + std::to_string(n) + "," + num(alpha) + ") " + num(closed) + " vs " + num(mass));
  }
  return c.outcome();
}

// 4. Closed form against direct quadrature.
Outcome mellin_cross_validation() {
  Checker c;
  const MultiplierSpec spec{0.0, 3};
  QuadratureOptions opt;
  opt.s_max = 20.0;
  opt.steps = 200000;
  double worst = 0.0;
  for (double u : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    const Complex q = a_alpha_quadrature(u, spec, opt).value;
    const double rel = std::abs(a_alpha_closed(u, spec) - q) / std::abs(q);
    worst = std::max(worst, rel);
    c.expect(rel <= 1e-3, "u=" + num(u) + " rel=" + num(rel));
  }
  c.note("max relative error " + num(worst));
  return c.outcome();
}

// 5. The u → 0 value of the closed form.
Outcome u_zero_limit() {
  Checker c;
  const MultiplierSpec spec{0.0, 3};
  const double target = (2.0 - oracle::kEulerGamma) / (2.0 * kPi);
  const Complex closed = a_alpha_closed(0.0, spec);
  c.expect(std::abs(closed - target) <= 1e-6,
           "a_alpha_closed(0) = " + num(closed.real()) + " vs " + num(target));
  c.note("literature variant a_alpha_cited(0) = " + num(a_alpha_cited(0.0, spec).real()));
  c.note("quadrature A(0) = " + num(a_alpha_quadrature(0.0, spec).value.real()));
  return c.outcome();
}

// 6. |A_α(u)| decays like u^{−(α+n/2)}.
Outcome decay_law() {
  Checker c;
  for (const auto& [n, alpha] : std::vector<std::pair<int, double>>{{3, 0.0}, {2, 0.5}, {3, 0.5}}) {
    const double slope = decay_exponent_fit({alpha, n}, 100.0, 1000.0, 50);
    const double predicted = -(alpha + 0.5 * n);
    c.expect(std::abs(slope - predicted) <= 0.1, "slope " + num(slope));
    c.note("(" + std::to_string(n) + "," + num(alpha) + ") slope " + num(slope));
  }
  return c.outcome();
}

// 7. Mellin inversion recovers F*(1) = −2π/e.
Outcome mellin_inversion() {
  Checker c;
  const MultiplierSpec spec{0.0, 3};
  const double target = -2 * kPi / std::exp(1.0);
  std::vector<double> errors;
  for (double u_max : {50.0, 100.0, 200.0, 400.0}) {
    errors.push_back(std::abs(mellin_reconstruct(1.0, spec, u_max, 0.01) - target));
  }
  c.expect(errors[2] <= 1e-2, "error at u_max=200 is " + num(errors[2]));
  for (std::size_t i = 1; i < errors.size(); ++i) {
    c.expect(errors[i] <= 1.1 * errors[i - 1], "error grew at step " + std::to_string(i));
  }
  c.note("errors " + num(errors[0]) + ", " + num(errors[1]) + ", " + num(errors[2]) + ", " +
         num(errors[3]));
  return c.outcome();
}

// 8. Plane waves evolve by sin(2π|k|t)/(2π|k|).
Outcome wave_eigenmode() {
  Checker c;
  double worst = 0.0;
  for (int n : {2, 3}) {
    const auto g = GridGeometry::cube(n, 16);
    const auto cfg = make_wave_config(n);
    const std::vector<std::pair<std::vector<int>, double>> cases{
        {{1, 0, 0}, 0.1}, {{2, -3, 1}, 0.45}, {{5, 4, -2}, 1.3}};
    for (const auto& [k3, t] : cases) {
      const std::vector<int> k(k3.begin(), k3.begin() + n);
      double k2 = 0.0;
      for (int v : k) k2 += v * v;
      const double kr = std::sqrt(k2);
      const auto e = plane_wave(g, k);
      const double coeff = std::sin(2 * kPi * kr * t) / (2 * kPi * kr);
      const double dev = wave_propagate(e, t, cfg).minus(e.scaled(coeff)).max_abs();
      worst = std::max(worst, dev);
      c.expect(dev <= 1e-8, "n=" + std::to_string(n) + " t=" + num(t));
    }
  }
  c.note("max error " + num(worst));
  return c.outcome();
}

// 9. c_n t F_{(3−n)/2}(tλ) = sin(2πtλ)/(2πλ) in every dimension.
Outcome multiplier_universality() {
  Checker c;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> t_dist(1e-3, 1.0);
  std::uniform_real_distribution<double> l_dist(1e-3, 20.0);
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const auto cfg = make_wave_config(n);
    for (int i = 0; i < 100; ++i) {
      const double t = t_dist(rng);
      const double lambda = l_dist(rng);
      const double lhs = cfg.c_n * t * f_alpha(t * lambda, cfg.spec());
      const double dev = std::abs(lhs - std::sin(2 * kPi * t * lambda) / (2 * kPi * lambda));
      worst = std::max(worst, dev);
      c.expect(dev <= 1e-10, "n=" + std::to_string(n) + " t=" + num(t) + " lambda=" + num(lambda));
    }
  }
  c.note("max error " + num(worst));
  return c.outcome();
}

// 10. The leapfrog oracle converges at second order to the spectral solution.
Outcome fd_convergence() {
  Checker c;
  const auto g = GridGeometry::cube(2, 128);
  const auto cfg = make_wave_config(2);
  const auto f = random_band_limited(g, 10, 32.0);
  const double t = 0.5;
  const auto exact = wave_propagate(f, t, cfg);
  const double bound = fd_stability_bound(g);
  std::vector<double> errors;
  for (int h = 0; h < 3; ++h) {
    errors.push_back(wave_fd_oracle(f, t, bound / std::pow(2.0, h)).minus(exact).l2_norm());
  }
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double ratio = errors[i - 1] / errors[i];
    c.expect(std::abs(ratio - 4.0) <= 0.8, "ratio " + num(ratio));
    c.note("ratio " + num(ratio));
  }
  return c.outcome();
}

// 11. Luxemburg norm examples and properties.
Outcome luxemburg() {
  Checker c;
  {
    const auto g = GridGeometry::cube(1, 16, 2.0);
    const double norm = luxemburg_norm(constant(g, 1.0), exponent_step(g, 1.0, 2.0));
    c.expect(std::abs(norm - (1 + std::sqrt(5.0)) / 2) <= 1e-8, "golden ratio " + num(norm));
  }
  {
    const auto g = GridGeometry::cube(2, 32, 1.3);
    const auto f = random_band_limited(g, 11, 8.0);
    for (double q : {1.0, 1.25, 2.0, 3.5, 6.0}) {
      const double ref = classical_norm(f, q);
      c.expect(std::abs(luxemburg_norm(f, VariableExponent::constant(g, q)) - ref) <= 1e-10 * ref,
               "L^" + num(q));
    }
  }
  const auto g = GridGeometry::cube(1, 128);
  const std::vector<VariableExponent> exps{exponent_sine(g, 2.0, 0.8), exponent_step(g, 1.3, 4.0),
                                           exponent_radial(g, 1.5, 3.0, 0.1)};
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto& p = exps[seed % exps.size()];
    const auto f = random_band_limited(g, seed, 20.0);
    const auto h = random_band_limited(g, seed + 500, 10.0);
    const double nf = luxemburg_norm(f, p);
    const double nh = luxemburg_norm(h, p);
    c.expect(std::abs(modular(f, p, nf) - 1.0) <= 1e-9, "unit ball");
    c.expect(std::abs(luxemburg_norm(f.scaled(-2.5), p) - 2.5 * nf) <= 1e-10 * 2.5 * nf, "homogeneity");
    c.expect(luxemburg_norm(f.plus(h), p) <= (nf + nh) * (1 + 1e-12), "triangle");
    const auto af = f.abs_values();
    const auto ah = h.abs_values();
    std::vector<double> sum(af.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = af[i] + ah[i];
    c.expect(nf <= luxemburg_norm(sum, p) * (1 + 1e-12), "monotonicity");
  }
  return c.outcome();
}

// 12. Interpolation exponent transform.
Outcome exponent_transform_lemma() {
  Checker c;
  const auto g = GridGeometry::cube(1, 256);
  const auto p = exponent_sine(g, 2.1, 0.35);
  for (const auto& [n, alpha] : std::vector<std::pair<int, double>>{{3, 0.0}, {3, 0.3}, {4, 0.5}}) {
    const auto t = exponent_transform(p, alpha, n);
    const double residual = t.identity_residual(p);
    c.expect(residual <= 1e-12, "identity residual " + num(residual));
    c.expect(t.theta > 0.0 && t.theta < 1.0 - 2.0 / n + 2.0 * alpha / n, "theta range");
    const double c1 = log_holder_constants(p).local;
    const double c1t = log_holder_constants(t.p_tilde).local;
    c.expect(std::abs(c1t - c1 / t.theta) <= 1e-10 * c1t, "log-Hoelder scaling");
  }
  const auto worked = exponent_transform(VariableExponent::constant(GridGeometry::cube(3, 4), 2.0), 0.0, 3);
  c.expect(std::abs(worked.theta - 0.25) <= 1e-15, "worked theta " + num(worked.theta));
  bool all_two = true;
  for (double v : worked.p_tilde.samples()) all_two = all_two && v == 2.0;
  c.expect(all_two, "worked p_tilde is not identically 2");
  return c.outcome();
}

// 13. Truth table of the range checks.
Outcome hypothesis_truth_table() {
  Checker c;
  const auto g = GridGeometry::cube(3, 4);
  const auto two = VariableExponent::constant(g, 2.0);
  const auto verdict = [&](const VariableExponent& p, double alpha, BoundClaim claim) {
    return check_bound_hypotheses(p, alpha, 3, claim);
  };
  c.expect(verdict(two, 0.0, BoundClaim::cor35).pass, "cor35 at p = 2");
  c.expect(verdict(two, 0.0, BoundClaim::cor36_wave).pass, "cor36_wave at p = 2");
  c.expect(!verdict(VariableExponent::constant(g, 1.2), 0.0, BoundClaim::cor35).pass, "cor35 at p = 1.2");
  c.expect(verdict(two, 0.0, BoundClaim::cor35).summary_line() == "pass 1.5 < 2 <= 2 < 4", "report line");
  c.expect(verdict(two, 0.5, BoundClaim::thm34).pass, "thm34 at p = 2, alpha = 1/2");
  c.expect(!verdict(exponent_step(g, 2.0, 11.0), 0.5, BoundClaim::thm34).pass, "thm34 at p+ = 11");
  c.expect(!verdict(two, 1.0, BoundClaim::thm32).pass, "thm32 at alpha = 1");
  // Exact endpoints: 1.5 = n/(n−1) is excluded, and 10 = p−(n−1+α)/(1−α) too.
  c.expect(!verdict(VariableExponent::constant(g, 1.5), 0.0, BoundClaim::cor35).pass, "endpoint 1.5");
  c.expect(!verdict(exponent_step(g, 2.0, 10.0), 0.5, BoundClaim::thm34).pass, "endpoint 10");
  return c.outcome();
}

// 14. Spherical mean = F* part + Gaussian part.
Outcome decomposition() {
  Checker c;
  double worst = 0.0;
  const std::vector<std::tuple<int, int, double>> cases{{3, 16, 0.0}, {2, 64, 0.5}};
  for (const auto& [n, size, alpha] : cases) {
    const auto g = GridGeometry::cube(n, size);
    for (std::uint64_t seed : {1, 2, 3}) {
      const auto f = random_band_limited(g, seed, size / 4.0);
      for (double t : {0.02, 0.1, 0.4}) {
        const auto split = f_star_part(f, t, alpha).plus(gaussian_part(f, t, alpha));
        const double dev = spherical_mean(f, t, alpha).minus(split).max_abs();
        worst = std::max(worst, dev);
        c.expect(dev <= 1e-10, "n=" + std::to_string(n) + " t=" + num(t));
      }
    }
  }
  c.note("max error " + num(worst));
  return c.outcome();
}

// 15. M f ≤ (1/F₀(0)) M⁰ f·1.05 on 1D Gaussian bumps.
Outcome pointwise_domination() {
  Checker c;
  const int size = 64;
  const auto g = GridGeometry::cube(1, size);
  const double h = g.side / size;
  std::vector<double> t_grid{1e-6 * h};
  for (int j = 1; j <= size / 2; ++j) t_grid.push_back(j * h);
  const double f0 = f_alpha_at_zero({0.0, 1});
  double worst = 0.0;
  for (double width : {0.01, 0.03, 0.05, 0.1, 0.2}) {
    for (double center : {0.5, 0.3125, 0.27}) {
      const std::vector<double> x0{center};
      const auto f = gaussian_bump(g, x0, width);
      const auto hl = hardy_littlewood_maximal(f, default_radii(g));
      const auto sm = spherical_maximal(f, 0.0, t_grid);
      for (std::size_t i = 0; i < g.point_count(); ++i) {
        const double bound = sm.values[i] / f0;
        worst = std::max(worst, hl[i].real() / bound);
        c.expect(hl[i].real() <= 1.05 * bound, "width " + num(width) + " node " + std::to_string(i));
      }
    }
  }
  c.note("max ratio " + num(worst));
  return c.outcome();
}

// 16. Growth of ‖I_{iu}‖ on L^{p(·)} in u, for exponents inside the α = 0 range.
Outcome norm_growth() {
  Checker c;
  const int n = 3;
  const auto g = GridGeometry::cube(n, 32);
  std::vector<double> us;
  for (double u = 1.0; u <= 256.0; u *= 2.0) us.push_back(u);
  std::vector<double> log_u;
  for (double u : us) log_u.push_back(std::log(1.0 + u));
  const std::vector<double> center(n, 0.4);
  const std::vector<int> k{3, -1, 2};
  const std::vector<GridFunction> battery{gaussian_bump(g, center, 0.05), random_band_limited(g, 16, 8.0),
                                          plane_wave(g, k)};
  const std::vector<VariableExponent> exps{exponent_sine(g, 2.0, 0.3), exponent_radial(g, 1.8, 2.4, 0.2)};
  for (const auto& p : exps) {
    c.expect(check_bound_hypotheses(p, 0.0, n, BoundClaim::cor35).pass, "exponent outside the range");
  }
  double worst = -1e300;
  for (const auto& f : battery) {
    for (const auto& p : exps) {
      std::vector<double> log_ratio;
      for (double u : us) log_ratio.push_back(std::log(imaginary_power_norm_ratio(f, p, u)));
      const double s = oracle::slope(log_u, log_ratio);
      worst = std::max(worst, s);
      c.expect(s <= 0.5 * n + 1.0, "slope " + num(s));
    }
  }
  c.note("max slope " + num(worst));
  return c.outcome();
}

// 17. A priori ratio under refinement and the small-time limit.
Outcome a_priori() {
  Checker c;
  std::vector<double> ratios;
  for (int size : {32, 64}) {
    const auto g = GridGeometry::cube(2, size);
    const std::vector<double> center{0.5, 0.5};
    const auto f = gaussian_bump(g, center, 0.1);
    const auto p = exponent_sine(g, 2.0, 0.5);
    const double r = a_priori_ratio(f, p, make_wave_config(2, default_wave_t_grid(g)));
    c.expect(std::isfinite(r) && r > 0.0, "ratio not finite");
    ratios.push_back(r);
  }
  c.expect(ratios[1] / ratios[0] <= 2.0 && ratios[0] / ratios[1] <= 2.0, "ratio unstable");
  c.note("ratios " + num(ratios[0]) + ", " + num(ratios[1]));

  const auto g = GridGeometry::cube(2, 32);
  const auto cfg = make_wave_config(2);
  const auto f = random_band_limited(g, 17, 4.0);
  std::vector<double> errors;
  for (double t : {1e-1, 1e-2, 1e-3}) errors.push_back(small_time_limit_error(f, cfg, t));
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double ratio = errors[i - 1] / errors[i];
    c.expect(std::abs(ratio - 100.0) <= 20.0, "small-time ratio " + num(ratio));
    c.note("small-time ratio " + num(ratio));
  }
  return c.outcome();
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 means no stated limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "plancherel isometry", 5.0, plancherel},
      {2, "closed-form collapse", 1.0, closed_form_collapse},
      {3, "mass consistency", 10.0, mass_consistency},
      {4, "mellin cross-validation", 30.0, mellin_cross_validation},
      {5, "u -> 0 limit", 0.0, u_zero_limit},
      {6, "decay law", 0.0, decay_law},
      {7, "mellin inversion", 0.0, mellin_inversion},
      {8, "wave eigenmode", 0.0, wave_eigenmode},
      {9, "multiplier universality", 0.0, multiplier_universality},
      {10, "fd oracle convergence", 60.0, fd_convergence},
      {11, "luxemburg norm", 0.0, luxemburg},
      {12, "exponent transform", 0.0, exponent_transform_lemma},
      {13, "hypothesis truth table", 0.0, hypothesis_truth_table},
      {14, "decomposition identity", 0.0, decomposition},
      {15, "pointwise domination", 0.0, pointwise_domination},
      {16, "norm-growth consistency", 0.0, norm_growth},
      {17, "a priori ratio", 0.0, a_priori},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && seconds > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + num(c.budget_seconds) + " s budget";
    }
    if (!o.pass) ++failed;
    std::printf("%s %2d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
