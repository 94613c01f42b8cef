// Python bindings. Grid data travels as numpy arrays whose shape gives the
// per-axis sizes; the physical period is passed as `side`.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "spheremax/cli.hpp"
#include "spheremax/errors.hpp"
#include "spheremax/hypotheses.hpp"
#include "spheremax/mellin.hpp"
#include "spheremax/operators.hpp"
#include "spheremax/specfun.hpp"
#include "spheremax/varlp.hpp"
#include "spheremax/wave.hpp"

namespace py = pybind11;
using namespace spheremax;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;
using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

GridGeometry geometry_of(const py::array& a, double side) {
  GridGeometry g;
  g.dim = static_cast<int>(a.ndim());
  for (py::ssize_t i = 0; i < a.ndim(); ++i) g.sizes.push_back(static_cast<int>(a.shape(i)));
  g.side = side;
  g.validate();
  return g;
}

std::vector<py::ssize_t> shape_of(const GridGeometry& g) {
  return {g.sizes.begin(), g.sizes.end()};
}

GridFunction to_grid(const ComplexArray& a, double side) {
  const auto g = geometry_of(a, side);
  return GridFunction(g, std::vector<Complex>(a.data(), a.data() + a.size()));
}

ComplexArray to_array(const GridFunction& f) {
  ComplexArray out(shape_of(f.geometry()));
  std::copy(f.samples().begin(), f.samples().end(), out.mutable_data());
  return out;
}

RealArray to_real_array(const GridGeometry& g, const std::vector<double>& values) {
  RealArray out(shape_of(g));
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

// A float gives a constant exponent; an array gives pointwise values.
VariableExponent to_exponent(const py::object& p, const GridGeometry& g, std::optional<double> p_inf) {
  if (py::isinstance<py::float_>(p) || py::isinstance<py::int_>(p)) {
    return VariableExponent::constant(g, p.cast<double>());
  }
  if (py::isinstance<py::str>(p)) return exponent_from_builder(g, p.cast<std::string>());
  const auto a = p.cast<RealArray>();
  if (!(geometry_of(a, g.side) == g)) throw PreconditionError("exponent shape differs from data shape");
  std::vector<double> samples(a.data(), a.data() + a.size());
  double fallback = 0.0;
  if (!p_inf) {
    fallback = samples.front();
    for (double v : samples) fallback = std::max(fallback, v);
  }
  return VariableExponent(g, std::move(samples), p_inf.value_or(fallback));
}

py::dict maximal_dict(const MaximalResult& m) {
  py::dict d;
  d["values"] = to_real_array(m.geometry, m.values);
  py::array_t<int> arg(shape_of(m.geometry));
  std::copy(m.argmax_t.begin(), m.argmax_t.end(), arg.mutable_data());
  d["argmax"] = arg;
  d["t_grid"] = m.t_grid;
  return d;
}

WaveConfig wave_config_for(const GridGeometry& g, std::optional<std::vector<double>> t_grid) {
  return make_wave_config(g.dim, t_grid ? *t_grid : default_wave_t_grid(g));
}

}  // namespace

PYBIND11_MODULE(_spheremax, m) {
  m.doc() = "Spectral operators, spherical means and variable-exponent norms on periodic grids";

  auto base = py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<MultiplierError>(m, "MultiplierError", PyExc_ArithmeticError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  (void)base;

  // Special functions.
  m.def("gamma", py::overload_cast<Complex>(&specfun::gamma), py::arg("z"));
  m.def("log_gamma", py::overload_cast<Complex>(&specfun::log_gamma), py::arg("z"));
  m.def("digamma", &specfun::digamma, py::arg("x"));
  m.def("bessel_j", &specfun::bessel_j, py::arg("nu"), py::arg("x"));

  // Multipliers and Mellin coefficients.
  m.def("f_alpha", [](double lambda, double alpha, int n) { return f_alpha(lambda, {alpha, n}); },
        py::arg("lam"), py::arg("alpha"), py::arg("n"));
  m.def("f_star", [](double lambda, double alpha, int n) { return f_star(lambda, {alpha, n}); },
        py::arg("lam"), py::arg("alpha"), py::arg("n"));
  m.def("a_alpha_closed", [](double u, double alpha, int n) { return a_alpha_closed(u, {alpha, n}); },
        py::arg("u"), py::arg("alpha"), py::arg("n"));
  m.def("a_alpha_cited", [](double u, double alpha, int n) { return a_alpha_cited(u, {alpha, n}); },
        py::arg("u"), py::arg("alpha"), py::arg("n"));
  m.def(
      "a_alpha_quadrature",
      [](double u, double alpha, int n, double s_max, int steps) {
        QuadratureOptions o;
        o.s_max = s_max;
        o.steps = steps;
        const auto r = a_alpha_quadrature(u, {alpha, n}, o);
        return py::make_tuple(r.value, r.tail_bound, r.accuracy_warning);
      },
      py::arg("u"), py::arg("alpha"), py::arg("n"), py::arg("s_max") = 20.0, py::arg("steps") = 200000,
      "Returns (value, tail_bound, accuracy_warning).");
  m.def(
      "mellin_reconstruct",
      [](double lambda, double alpha, int n, double u_max, double du) {
        return mellin_reconstruct(lambda, {alpha, n}, u_max, du);
      },
      py::arg("lam"), py::arg("alpha"), py::arg("n"), py::arg("u_max") = 200.0, py::arg("du") = 0.01);
  m.def(
      "decay_exponent_fit",
      [](double alpha, int n, double u_lo, double u_hi, int points) {
        return decay_exponent_fit({alpha, n}, u_lo, u_hi, points);
      },
      py::arg("alpha"), py::arg("n"), py::arg("u_lo") = 100.0, py::arg("u_hi") = 1000.0,
      py::arg("points") = 50);

  // Grid operators.
  m.def("imaginary_power",
        [](const ComplexArray& f, double u, double side) { return to_array(imaginary_power(to_grid(f, side), u)); },
        py::arg("f"), py::arg("u"), py::arg("side") = 1.0);
  m.def("riesz_potential",
        [](const ComplexArray& f, double alpha, double side) {
          return to_array(riesz_potential(to_grid(f, side), alpha));
        },
        py::arg("f"), py::arg("alpha"), py::arg("side") = 1.0);
  m.def("spherical_mean",
        [](const ComplexArray& f, double t, double alpha, double side) {
          return to_array(spherical_mean(to_grid(f, side), t, alpha));
        },
        py::arg("f"), py::arg("t"), py::arg("alpha"), py::arg("side") = 1.0);
  m.def("gaussian_part",
        [](const ComplexArray& f, double t, double alpha, double side) {
          return to_array(gaussian_part(to_grid(f, side), t, alpha));
        },
        py::arg("f"), py::arg("t"), py::arg("alpha"), py::arg("side") = 1.0);
  m.def("f_star_part",
        [](const ComplexArray& f, double t, double alpha, double side) {
          return to_array(f_star_part(to_grid(f, side), t, alpha));
        },
        py::arg("f"), py::arg("t"), py::arg("alpha"), py::arg("side") = 1.0);
  m.def(
      "spherical_maximal",
      [](const ComplexArray& f, double alpha, std::optional<std::vector<double>> t_grid, double side) {
        const auto g = to_grid(f, side);
        return maximal_dict(spherical_maximal(g, alpha, t_grid ? *t_grid : default_t_grid(g.geometry())));
      },
      py::arg("f"), py::arg("alpha"), py::arg("t_grid") = py::none(), py::arg("side") = 1.0,
      "Returns a dict with 'values', 'argmax' and 't_grid'.");
  m.def(
      "hardy_littlewood_maximal",
      [](const ComplexArray& f, std::optional<std::vector<double>> radii, double side) {
        const auto g = to_grid(f, side);
        const auto out = hardy_littlewood_maximal(g, radii ? *radii : default_radii(g.geometry()));
        return to_real_array(g.geometry(), out.real_values());
      },
      py::arg("f"), py::arg("radii") = py::none(), py::arg("side") = 1.0);

  // Variable exponents.
  m.def(
      "luxemburg_norm",
      [](const ComplexArray& f, const py::object& p, std::optional<double> p_infinity, double side) {
        const auto g = to_grid(f, side);
        return luxemburg_norm(g, to_exponent(p, g.geometry(), p_infinity));
      },
      py::arg("f"), py::arg("p"), py::arg("p_infinity") = py::none(), py::arg("side") = 1.0,
      "p is a number, a builder string such as 'sine:2:0.5', or an array shaped like f.");
  m.def(
      "norm_ratio",
      [](const ComplexArray& f, const py::object& p, double u, std::optional<double> p_infinity, double side) {
        const auto g = to_grid(f, side);
        return imaginary_power_norm_ratio(g, to_exponent(p, g.geometry(), p_infinity), u);
      },
      py::arg("f"), py::arg("p"), py::arg("u"), py::arg("p_infinity") = py::none(), py::arg("side") = 1.0);
  m.def(
      "check_bound_hypotheses",
      [](const RealArray& p, double alpha, int n, const std::string& claim, std::optional<double> p_infinity) {
        const auto g = geometry_of(p, 1.0);
        const auto report = check_bound_hypotheses(to_exponent(p, g, p_infinity), alpha, n, parse_claim(claim));
        return py::make_tuple(report.pass, report.summary_line(), report.to_json());
      },
      py::arg("p"), py::arg("alpha"), py::arg("n"), py::arg("claim") = "cor35",
      py::arg("p_infinity") = py::none(), "Returns (pass, summary_line, json_report).");

  // Wave equation.
  m.def(
      "wave_propagate",
      [](const ComplexArray& f, double t, double side) {
        const auto g = to_grid(f, side);
        return to_array(wave_propagate(g, t, make_wave_config(g.geometry().dim)));
      },
      py::arg("f"), py::arg("t"), py::arg("side") = 1.0);
  m.def(
      "darboux_solution",
      [](const ComplexArray& f, double t, double side) {
        const auto g = to_grid(f, side);
        return to_array(darboux_solution(g, t, make_wave_config(g.geometry().dim)));
      },
      py::arg("f"), py::arg("t"), py::arg("side") = 1.0);
  m.def(
      "wave_fd_oracle",
      [](const ComplexArray& f, double t, double dt, double side) {
        return to_array(wave_fd_oracle(to_grid(f, side), t, dt));
      },
      py::arg("f"), py::arg("t"), py::arg("dt"), py::arg("side") = 1.0);
  m.def(
      "a_priori_ratio",
      [](const ComplexArray& f, const py::object& p, std::optional<std::vector<double>> t_grid,
         std::optional<double> p_infinity, double side) {
        const auto g = to_grid(f, side);
        return a_priori_ratio(g, to_exponent(p, g.geometry(), p_infinity), wave_config_for(g.geometry(), t_grid));
      },
      py::arg("f"), py::arg("p"), py::arg("t_grid") = py::none(), py::arg("p_infinity") = py::none(),
      py::arg("side") = 1.0);

  // Command line.
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line in process. Returns (exit_code, stdout, stderr).");
}
