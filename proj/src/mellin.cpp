#include "spheremax/mellin.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "spheremax/csv.hpp"
#include "spheremax/errors.hpp"
#include "spheremax/specfun.hpp"

namespace spheremax {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesCrossover = 1e-3;

// Shared shape of both closed forms:
//   prefactor · Γ(−iu/2) · [e^{iu·phase}/Γ(a + iu/2) − 1/Γ(a)].
Complex gamma_quotient_form(double u, double a, double prefactor, double phase) {
  const Complex iu(0.0, u);
  if (std::abs(u) >= kSeriesCrossover) {
    const Complex lg = specfun::log_gamma(-0.5 * iu);
    const Complex first = std::exp(lg + iu * phase - specfun::log_gamma(a + 0.5 * iu));
    const Complex second = std::exp(lg - specfun::log_gamma(a));
    return prefactor * (first - second);
  }
  // With ε = −iu/2 the bracket is (g(ε) − 1)/Γ(a), g = e^{h},
  //   h(ε) = −2εφ + log Γ(a) − log Γ(a−ε) = c1 ε + c2 ε² + c3 ε³ + c4 ε⁴ + …,
  // and Γ(ε)(g − 1) = Γ(1+ε)·expm1(h)/ε.
  const double c1 = specfun::digamma(a) - 2.0 * phase;
  const double c2 = -specfun::polygamma(1, a) / 2.0;
  const double c3 = specfun::polygamma(2, a) / 6.0;
  const double c4 = -specfun::polygamma(3, a) / 24.0;
  const Complex eps = -0.5 * iu;
  const Complex h_over_eps = c1 + eps * (c2 + eps * (c3 + eps * c4));
  const Complex h = eps * h_over_eps;
  const Complex expm1_over_h = 1.0 + h * (0.5 + h * (1.0 / 6 + h * (1.0 / 24 + h / 120.0)));
  const Complex gamma_1p = u == 0.0 ? Complex(1.0) : specfun::gamma(1.0 + eps);
  return prefactor * gamma_1p * h_over_eps * expm1_over_h / specfun::gamma(a);
}

}  // namespace

void MultiplierSpec::validate() const {
  if (n < 1) throw PreconditionError("multiplier: n must be >= 1");
  if (!std::isfinite(alpha)) throw PreconditionError("multiplier: alpha must be finite");
  if (order() < -0.5) {
    std::ostringstream os;
    os << "multiplier: Bessel order n/2+alpha-1 = " << order() << " below -1/2";
    throw PreconditionError(os.str());
  }
}

bool MultiplierSpec::in_mellin_range() const { return alpha > 1.0 - 0.5 * n && alpha < 1.0; }

double f_alpha_at_zero(const MultiplierSpec& spec) {
  spec.validate();
  return std::pow(kPi, 0.5 * spec.n) / specfun::gamma(spec.shifted());
}

double f_alpha(double lambda, const MultiplierSpec& spec) {
  spec.validate();
  if (!(lambda >= 0.0)) throw PreconditionError("f_alpha: lambda must be >= 0");
  if (lambda == 0.0) return f_alpha_at_zero(spec);
  const double nu = spec.order();
  return std::pow(kPi, 1.0 - spec.alpha) * std::pow(lambda, -nu) *
         specfun::bessel_j(nu, 2.0 * kPi * lambda);
}

double f_star(double lambda, const MultiplierSpec& spec) {
  if (lambda == 0.0) return 0.0;
  return f_alpha(lambda, spec) - f_alpha_at_zero(spec) * std::exp(-lambda * lambda);
}

Complex a_alpha_closed(double u, const MultiplierSpec& spec) {
  spec.validate();
  if (!std::isfinite(u)) throw PreconditionError("a_alpha_closed: u must be finite");
  const double prefactor = std::pow(kPi, 0.5 * spec.n - 1.0) / 4.0;
  return gamma_quotient_form(u, spec.shifted(), prefactor, std::log(kPi));
}

Complex a_alpha_cited(double u, const MultiplierSpec& spec) {
  spec.validate();
  if (!std::isfinite(u)) throw PreconditionError("a_alpha_cited: u must be finite");
  const double a = spec.shifted();
  const double prefactor = specfun::gamma(Complex(a - 0.5)).real() / (4.0 * std::sqrt(kPi));
  return gamma_quotient_form(u, a, prefactor, -std::log(2.0));
}

QuadratureResult a_alpha_quadrature(double u, const MultiplierSpec& spec,
                                    const QuadratureOptions& options) {
  spec.validate();
  if (!(options.s_max > 0.0)) throw PreconditionError("a_alpha_quadrature: s_max must be > 0");
  if (options.steps < 1000) throw PreconditionError("a_alpha_quadrature: need steps >= 1000");

  const double h = 2.0 * options.s_max / options.steps;
  Complex sum = 0.0;
  for (int j = 0; j <= options.steps; ++j) {
    const double s = -options.s_max + j * h;
    const double weight = (j == 0 || j == options.steps) ? 0.5 : 1.0;
    const double value = f_star(std::exp(s), spec);
    sum += weight * value * Complex(std::cos(u * s), -std::sin(u * s));
  }

  QuadratureResult result;
  result.value = sum * h / (2.0 * kPi);

  const double kappa = 0.5 * (spec.n - 1) + spec.alpha;  // decay rate of the envelope
  const double upper_tail = kappa > 0.0
                                ? std::pow(kPi, -spec.alpha) * std::exp(-kappa * options.s_max) / kappa
                                : std::numeric_limits<double>::infinity();
  const double f0 = f_alpha_at_zero(spec);
  const double quad_coeff = f0 * std::abs(1.0 - kPi * kPi / (spec.order() + 1.0));
  const double lower_tail = quad_coeff * std::exp(-2.0 * options.s_max);  // 2× the λ² estimate
  result.tail_bound = (upper_tail + lower_tail) / (2.0 * kPi);
  result.accuracy_warning = result.tail_bound > 10.0 * options.tolerance;
  return result;
}

Complex mellin_reconstruct_complex(double lambda, const MultiplierSpec& spec, double u_max,
                                   double du) {
  if (!(lambda > 0.0)) throw PreconditionError("mellin_reconstruct: lambda must be > 0");
  if (!(u_max > 0.0) || !(du > 0.0)) {
    throw PreconditionError("mellin_reconstruct: u_max and du must be > 0");
  }
  const long intervals = std::lround(2.0 * u_max / du);
  const double step = 2.0 * u_max / static_cast<double>(intervals);
  const double log_lambda = std::log(lambda);
  Complex sum = 0.0;
  for (long j = 0; j <= intervals; ++j) {
    const double u = -u_max + static_cast<double>(j) * step;
    const double weight = (j == 0 || j == intervals) ? 0.5 : 1.0;
    const Complex phase(std::cos(u * log_lambda), std::sin(u * log_lambda));
    sum += weight * a_alpha_closed(u, spec) * phase;
  }
  return sum * step;
}

double mellin_reconstruct(double lambda, const MultiplierSpec& spec, double u_max, double du) {
  return mellin_reconstruct_complex(lambda, spec, u_max, du).real();
}

double decay_exponent_fit(const MultiplierSpec& spec, double u_lo, double u_hi, int points) {
  if (!(u_lo >= 10.0 && u_lo < u_hi)) {
    throw PreconditionError("decay_exponent_fit: need 10 <= u_lo < u_hi");
  }
  if (points < 2) throw PreconditionError("decay_exponent_fit: need at least 2 points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double ratio = std::log(u_hi / u_lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double u = u_lo * std::exp(ratio * i);
    const double x = std::log1p(u);
    const double y = std::log(std::abs(a_alpha_closed(u, spec)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = points;
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

IntegrabilityReport interpolation_integrability(const MultiplierSpec& spec, double theta,
                                                double delta) {
  IntegrabilityReport r;
  r.exponent = -spec.alpha - 0.5 * spec.n + theta * 0.5 * spec.n + theta * delta;
  r.integrable = r.exponent < -1.0;
  r.integral = r.integrable ? 2.0 / (-r.exponent - 1.0) : std::numeric_limits<double>::infinity();
  return r;
}

std::string method_name(MellinMethod m) {
  switch (m) {
    case MellinMethod::closed: return "closed";
    case MellinMethod::quadrature: return "quadrature";
    case MellinMethod::cited: return "cited";
  }
  return "unknown";
}

MellinTable build_mellin_table(const MultiplierSpec& spec, std::vector<double> u_grid,
                               MellinMethod method, const QuadratureOptions& options) {
  MellinTable table{spec, std::move(u_grid), {}, method};
  table.values.reserve(table.u_grid.size());
  for (double u : table.u_grid) {
    switch (method) {
      case MellinMethod::closed: table.values.push_back(a_alpha_closed(u, spec)); break;
      case MellinMethod::cited: table.values.push_back(a_alpha_cited(u, spec)); break;
      case MellinMethod::quadrature:
        table.values.push_back(a_alpha_quadrature(u, spec, options).value);
        break;
    }
  }
  return table;
}

void write_mellin_rows(std::ostream& out, const MellinTable& table) {
  const std::string tail =
      "," + method_name(table.method) + "," + csv_number(table.spec.alpha) + "," +
      std::to_string(table.spec.n);
  for (std::size_t i = 0; i < table.u_grid.size(); ++i) {
    const Complex v = table.values[i];
    out << csv_number(table.u_grid[i]) << ',' << csv_number(v.real()) << ','
        << csv_number(v.imag()) << ',' << csv_number(std::abs(v)) << tail << '\n';
  }
}

}  // namespace spheremax
