#include "spheremax/varlp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "spheremax/errors.hpp"

namespace spheremax {

namespace {

double inverse_exponent(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

void require_same_grid(const GridGeometry& a, const GridGeometry& b) {
  if (!(a == b)) throw PreconditionError("varlp: function and exponent grids differ");
}

std::vector<double> split_numbers(const std::string& text, char sep) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("exponent builder: bad number '" + item + "'");
    }
    if (used != item.size()) throw PreconditionError("exponent builder: bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// Torus (minimum-image) distance between two nodes.
double torus_distance(const GridGeometry& g, const std::vector<int>& a, const std::vector<int>& b) {
  double d2 = 0.0;
  for (std::size_t ax = 0; ax < a.size(); ++ax) {
    const int n = g.sizes[ax];
    int di = std::abs(a[ax] - b[ax]);
    di = std::min(di, n - di);
    const double d = di * (g.side / n);
    d2 += d * d;
  }
  return std::sqrt(d2);
}

}  // namespace

// ------------------------------------------------------- VariableExponent

VariableExponent::VariableExponent(GridGeometry geometry, std::vector<double> samples,
                                   double p_infinity)
    : geometry_(std::move(geometry)), samples_(std::move(samples)), p_infinity_(p_infinity) {
  geometry_.validate();
  if (samples_.size() != geometry_.point_count()) {
    throw PreconditionError("exponent: sample count does not match geometry");
  }
  if (!(p_infinity_ >= 1.0)) throw PreconditionError("exponent: p_infinity must be in [1, inf]");
  bool any_finite = false;
  double lo = kInfiniteExponent;
  double hi = 1.0;
  for (double p : samples_) {
    if (!(p >= 1.0)) throw PreconditionError("exponent: values must lie in [1, inf]");
    if (std::isinf(p)) {
      has_infinite_ = true;
      continue;
    }
    any_finite = true;
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  if (any_finite) {
    p_minus_ = lo;
    p_plus_ = hi;
  }
}

VariableExponent VariableExponent::constant(const GridGeometry& geometry, double q) {
  return VariableExponent(geometry, std::vector<double>(geometry.point_count(), q), q);
}

VariableExponent VariableExponent::from_function(
    const GridGeometry& geometry, const std::function<double(std::span<const double>)>& p,
    double p_infinity) {
  geometry.validate();
  std::vector<double> samples(geometry.point_count());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto x = geometry.centered_coordinate(i);
    samples[i] = p(x);
  }
  return VariableExponent(geometry, std::move(samples), p_infinity);
}

VariableExponent exponent_sine(const GridGeometry& g, double mean, double amplitude) {
  const double L = g.side;
  return VariableExponent::from_function(
      g,
      [=](std::span<const double> x) {
        return mean + amplitude * std::sin(2.0 * std::numbers::pi * x[0] / L);
      },
      mean);
}

VariableExponent exponent_step(const GridGeometry& g, double low, double high) {
  g.validate();
  std::vector<double> samples(g.point_count());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i] = g.unravel(i)[0] < g.sizes[0] / 2 ? low : high;
  }
  return VariableExponent(g, std::move(samples), high);
}

VariableExponent exponent_radial(const GridGeometry& g, double inner, double outer, double width) {
  if (!(width > 0.0)) throw PreconditionError("exponent builder: radial width must be > 0");
  return VariableExponent::from_function(
      g,
      [=](std::span<const double> x) {
        double r2 = 0.0;
        for (double c : x) r2 += c * c;
        return outer + (inner - outer) * std::exp(-r2 / (width * width));
      },
      outer);
}

VariableExponent exponent_from_builder(const GridGeometry& g, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::vector<double> args =
      colon == std::string::npos ? std::vector<double>{} : split_numbers(spec.substr(colon + 1), ':');
  auto want = [&](std::size_t count) {
    if (args.size() != count) {
      throw PreconditionError("exponent builder '" + name + "' expects " + std::to_string(count) +
                              " parameters");
    }
  };
  if (name == "const") {
    want(1);
    return VariableExponent::constant(g, args[0]);
  }
  if (name == "sine") {
    want(2);
    return exponent_sine(g, args[0], args[1]);
  }
  if (name == "step") {
    want(2);
    return exponent_step(g, args[0], args[1]);
  }
  if (name == "radial") {
    want(3);
    return exponent_radial(g, args[0], args[1], args[2]);
  }
  throw PreconditionError("unknown exponent builder '" + name + "'");
}

// ------------------------------------------------------- modular and norm

double modular(std::span<const double> magnitudes, const VariableExponent& p, double lambda) {
  if (!(lambda > 0.0)) throw PreconditionError("modular: lambda must be > 0");
  if (magnitudes.size() != p.size()) throw PreconditionError("modular: size mismatch");
  const double cell = p.geometry().cell_volume();
  double integral = 0.0;
  double sup = 0.0;
  for (std::size_t i = 0; i < magnitudes.size(); ++i) {
    const double v = magnitudes[i] / lambda;
    if (std::isinf(p[i])) {
      sup = std::max(sup, v);
    } else if (v > 0.0) {
      integral += std::pow(v, p[i]);
    }
  }
  return integral * cell + sup;
}

double modular(const GridFunction& f, const VariableExponent& p, double lambda) {
  require_same_grid(f.geometry(), p.geometry());
  const auto mags = f.abs_values();
  return modular(mags, p, lambda);
}

double luxemburg_norm(std::span<const double> magnitudes, const VariableExponent& p,
                      double rel_tol) {
  if (magnitudes.size() != p.size()) throw PreconditionError("luxemburg_norm: size mismatch");
  const double peak = *std::max_element(magnitudes.begin(), magnitudes.end());
  if (peak == 0.0) return 0.0;

  const double vol = p.geometry().volume();
  const double q = p.p_plus();
  double guess = peak * (std::isinf(q) ? 1.0 : std::min(1.0, std::pow(vol, 1.0 / q)));
  auto rho = [&](double lambda) { return modular(magnitudes, p, lambda); };

  double hi = guess;
  while (rho(hi) > 1.0) hi *= 2.0;
  double lo = hi;
  while (rho(lo) <= 1.0) lo *= 0.5;
  // rho(lo) > 1 >= rho(hi)
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (rho(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double luxemburg_norm(const GridFunction& f, const VariableExponent& p, double rel_tol) {
  require_same_grid(f.geometry(), p.geometry());
  const auto mags = f.abs_values();
  return luxemburg_norm(mags, p, rel_tol);
}

VariableExponent dual_exponent(const VariableExponent& p) {
  auto dual = [](double q) {
    if (q == 1.0) return kInfiniteExponent;
    if (std::isinf(q)) return 1.0;
    return q / (q - 1.0);
  };
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dual(p[i]);
  return VariableExponent(p.geometry(), std::move(out), dual(p.p_infinity()));
}

// ------------------------------------------------------------ log-Hölder

LogHolderEstimate log_holder_constants(const VariableExponent& p) {
  if (p.has_infinite_region()) {
    throw DomainError("log_holder_constants: exponent must be finite everywhere");
  }
  const auto& g = p.geometry();
  const std::size_t count = p.size();
  if (count > (std::size_t{1} << 14)) {
    throw PreconditionError("log_holder_constants: brute-force scan limited to 2^14 points");
  }
  std::vector<double> inv(count);
  std::vector<std::vector<int>> idx(count);
  for (std::size_t i = 0; i < count; ++i) {
    inv[i] = 1.0 / p[i];
    idx[i] = g.unravel(i);
  }

  LogHolderEstimate est;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const double diff = std::abs(inv[i] - inv[j]);
      if (diff == 0.0) continue;
      const double d = torus_distance(g, idx[i], idx[j]);
      if (d >= 0.5) continue;
      est.local = std::max(est.local, diff * std::log(std::numbers::e + 1.0 / d));
    }
  }
  const double inv_inf = inverse_exponent(p.p_infinity());
  for (std::size_t i = 0; i < count; ++i) {
    const auto x = g.centered_coordinate(i);
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    est.decay = std::max(est.decay,
                         std::abs(inv[i] - inv_inf) * std::log(std::numbers::e + std::sqrt(r2)));
  }
  return est;
}

bool log_holder_stable(const LogHolderEstimate& coarse, const LogHolderEstimate& fine,
                       double rel_tol) {
  if (coarse.local == 0.0) return fine.local == 0.0;
  return std::abs(fine.local / coarse.local - 1.0) <= rel_tol;
}

// --------------------------------------------------- interpolation exponent

double ExponentTransform::identity_residual(const VariableExponent& p) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double lhs = 1.0 / p[i];
    const double rhs = 0.5 * (1.0 - theta) + theta / p_tilde[i];
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

ExponentTransform exponent_transform(const VariableExponent& p, double alpha, int n) {
  if (n < 1) throw PreconditionError("exponent_transform: n must be >= 1");
  const double nd = n;
  if (!(alpha > 1.0 - nd / 2.0 && alpha < 1.0)) {
    throw PreconditionError("exponent_transform: need 1 - n/2 < alpha < 1");
  }
  if (p.has_infinite_region()) {
    throw PreconditionError("exponent_transform: exponent must be finite (p+ < inf)");
  }
  const double lower = nd / (nd - 1.0 + alpha);
  const double upper = nd / (1.0 - alpha);
  if (!(p.p_minus() > lower)) {
    std::ostringstream os;
    os << "exponent_transform: need p- > n/(n-1+alpha) = " << lower << ", got " << p.p_minus();
    throw PreconditionError(os.str());
  }
  if (!(p.p_plus() < upper)) {
    std::ostringstream os;
    os << "exponent_transform: need p+ < n/(1-alpha) = " << upper << ", got " << p.p_plus();
    throw PreconditionError(os.str());
  }

  const double width = 1.0 - 2.0 / nd + 2.0 * alpha / nd;  // θ ranges over (0, width)
  const double r_floor = 1.0 / nd - alpha / nd - 0.5;
  const double r_ceiling = 0.5 - 1.0 / nd + alpha / nd;

  std::vector<double> r(p.size());
  double r_min = std::numeric_limits<double>::infinity();
  double r_max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = 1.0 / p[i] - 0.5;
    r_min = std::min(r_min, r[i]);
    r_max = std::max(r_max, r[i]);
  }
  const double delta = 0.5 * std::min(r_min - r_floor, r_ceiling - r_max);
  const double theta0 = delta;
  const double theta = width - theta0;

  std::vector<double> ptilde(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) ptilde[i] = 1.0 / (0.5 + r[i] / theta);

  double ptilde_inf = kInfiniteExponent;
  {
    const double inv = 0.5 + (inverse_exponent(p.p_infinity()) - 0.5) / theta;
    if (inv >= 1.0) {
      ptilde_inf = 1.0;
    } else if (inv > 0.0) {
      ptilde_inf = 1.0 / inv;
    }
  }

  return ExponentTransform{theta,
                           theta0,
                           delta,
                           std::move(r),
                           VariableExponent(p.geometry(), std::move(ptilde), ptilde_inf),
                           alpha,
                           n};
}

}  // namespace spheremax
