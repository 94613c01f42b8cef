#include "spheremax/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "spheremax/csv.hpp"
#include "spheremax/errors.hpp"
#include "spheremax/hypotheses.hpp"
#include "spheremax/io.hpp"
#include "spheremax/mellin.hpp"
#include "spheremax/operators.hpp"
#include "spheremax/wave.hpp"

namespace spheremax::cli {

namespace {

// Flags shared by every subcommand.
struct Config {
  int dim = 3;
  int size = 32;
  double side = 1.0;
  double alpha = 0.0;
  std::optional<double> u_min, u_max;
  std::optional<int> u_points;
  std::optional<double> t_min, t_max;
  std::optional<int> t_points;
  std::string exponent = "const:2";
  std::uint64_t seed = 1;
  std::string out = "-";
  bool strict = false;

  // Subcommand extras.
  std::string claim = "cor35";
  std::string function = "gaussian";
  std::string input;
  double width = 0.1;
  double cutoff = 0.0;  // 0 selects size/4
  std::string k = "1";
  double lambda = 1.0;
  double du = 0.01;
  bool cited = false;
  bool with_hl = false;
  double fd_time = 0.5;
  std::string report;
  std::string kind = "gaussian";

  GridGeometry geometry() const {
    auto g = GridGeometry::cube(dim, size, side);
    g.validate();
    return g;
  }

  std::string describe(const std::string& command) const {
    std::ostringstream os;
    os << command << " dim=" << dim << " size=" << size << " side=" << format_number(side)
       << " alpha=" << format_number(alpha) << " seed=" << seed;
    return os.str();
  }
};

// Thrown to leave run() with the accuracy exit code after output is written.
struct AccuracyWarning {
  std::string message;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& stdout_stream) : path_(path), stdout_(stdout_stream) {}
  std::ostream& stream() { return buffer_; }
  void commit() {
    if (path_ == "-") {
      stdout_ << buffer_.str();
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw FormatError("cannot write " + path_);
    file << buffer_.str();
  }

 private:
  std::string path_;
  std::ostream& stdout_;
  std::ostringstream buffer_;
};

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 1) throw PreconditionError("grid needs at least one point");
  if (points == 1) return {lo};
  if (!(hi > lo)) throw PreconditionError("grid needs max > min");
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  return out;
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
  if (!(lo > 0.0)) throw PreconditionError("geometric grid needs min > 0");
  if (points < 1) throw PreconditionError("grid needs at least one point");
  if (points == 1) return {lo};
  if (!(hi > lo)) throw PreconditionError("grid needs max > min");
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, double(i) / (points - 1));
  out.back() = hi;
  return out;
}

std::vector<double> t_grid_from(const Config& c, std::vector<double> fallback) {
  if (!c.t_min && !c.t_max && !c.t_points) return fallback;
  const double lo = c.t_min.value_or(fallback.front());
  const double hi = c.t_max.value_or(fallback.back());
  return geometric_grid(lo, hi, c.t_points.value_or(static_cast<int>(fallback.size())));
}

VariableExponent exponent_from(const Config& c, const GridGeometry& g) {
  if (std::filesystem::exists(c.exponent)) {
    auto p = read_exponent_file(c.exponent);
    if (!(p.geometry() == g)) throw PreconditionError("exponent file grid differs from --dim/--size/--side");
    return p;
  }
  return exponent_from_builder(g, c.exponent);
}

std::vector<int> parse_ints(const std::string& text, int dim) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("--k: expected comma-separated integers, got '" + text + "'");
    }
  }
  out.resize(static_cast<std::size_t>(dim), 0);
  return out;
}

GridFunction test_function(const Config& c, const GridGeometry& g) {
  if (!c.input.empty()) {
    auto f = read_grid_file(c.input);
    if (!(f.geometry() == g)) throw PreconditionError("input grid differs from --dim/--size/--side");
    return f;
  }
  if (c.function == "gaussian") {
    const std::vector<double> center(static_cast<std::size_t>(g.dim), 0.0);
    return gaussian_bump(g, center, c.width * g.side);
  }
  if (c.function == "random") {
    const double cutoff = c.cutoff > 0.0 ? c.cutoff : c.size / 4.0;
    return random_band_limited(g, c.seed, cutoff);
  }
  if (c.function == "plane") {
    const auto k = parse_ints(c.k, g.dim);
    return plane_wave(g, k);
  }
  throw PreconditionError("unknown --function '" + c.function + "' (gaussian|random|plane)");
}

int cmd_mellin_table(const Config& c, Output& out) {
  const MultiplierSpec spec{c.alpha, c.dim};
  spec.validate();
  const auto u = linear_grid(c.u_min.value_or(0.5), c.u_max.value_or(20.0), c.u_points.value_or(40));
  std::vector<std::string> warnings;
  write_csv_preamble(out.stream(), c.describe("mellin-table"),
                     {"u", "re_A", "im_A", "abs_A", "method", "alpha", "n"});
  write_mellin_rows(out.stream(), build_mellin_table(spec, u, MellinMethod::closed));
  MellinTable quad{spec, u, {}, MellinMethod::quadrature};
  for (double v : u) {
    const auto r = a_alpha_quadrature(v, spec);
    quad.values.push_back(r.value);
    if (r.accuracy_warning) warnings.push_back("quadrature tail bound " + format_number(r.tail_bound) + " at u = " + format_number(v));
  }
  write_mellin_rows(out.stream(), quad);
  if (c.cited) write_mellin_rows(out.stream(), build_mellin_table(spec, u, MellinMethod::cited));
  out.commit();
  if (!warnings.empty() && c.strict) throw AccuracyWarning{warnings.front()};
  return kSuccess;
}

int cmd_decay_fit(const Config& c, Output& out) {
  const MultiplierSpec spec{c.alpha, c.dim};
  spec.validate();
  const double lo = c.u_min.value_or(100.0);
  const double hi = c.u_max.value_or(1000.0);
  const int points = c.u_points.value_or(50);
  const double slope = decay_exponent_fit(spec, lo, hi, points);
  const double predicted = -(c.alpha + 0.5 * c.dim);
  write_csv_preamble(out.stream(), c.describe("decay-fit"),
                     {"n", "alpha", "u_min", "u_max", "points", "slope", "predicted", "deviation"});
  out.stream() << c.dim << ',' << csv_number(c.alpha) << ',' << csv_number(lo) << ','
               << csv_number(hi) << ',' << points << ',' << csv_number(slope) << ','
               << csv_number(predicted) << ',' << csv_number(slope - predicted) << '\n';
  out.commit();
  if (c.strict && std::abs(slope - predicted) > 0.1) {
    throw AccuracyWarning{"slope " + format_number(slope) + " deviates from " + format_number(predicted)};
  }
  return kSuccess;
}

int cmd_reconstruct(const Config& c, Output& out) {
  const MultiplierSpec spec{c.alpha, c.dim};
  spec.validate();
  if (!(c.lambda > 0.0)) throw PreconditionError("--lambda must be > 0");
  const double lo = c.u_min.value_or(50.0);
  const double hi = c.u_max.value_or(400.0);
  const double exact = f_star(c.lambda, spec);
  write_csv_preamble(out.stream(), c.describe("reconstruct"),
                     {"u_max", "du", "lambda", "reconstructed", "exact", "abs_error"});
  if (!(lo > 0.0) || hi < lo) throw PreconditionError("reconstruct: need 0 < u-min <= u-max");
  // u_max doubles from u-min while it stays within u-max.
  for (double u_max = lo; u_max <= hi * (1.0 + 1e-12); u_max *= 2.0) {
    const double value = mellin_reconstruct(c.lambda, spec, u_max, c.du);
    out.stream() << csv_number(u_max) << ',' << csv_number(c.du) << ',' << csv_number(c.lambda)
                 << ',' << csv_number(value) << ',' << csv_number(exact) << ','
                 << csv_number(std::abs(value - exact)) << '\n';
  }
  out.commit();
  return kSuccess;
}

int cmd_norm_growth(Config c, Output& out) {
  if (c.function == "gaussian" && c.input.empty()) c.function = "random";
  const auto g = c.geometry();
  const auto f = test_function(c, g);
  const auto p = exponent_from(c, g);
  std::vector<double> u{0.0};
  for (double v : geometric_grid(c.u_min.value_or(1.0), c.u_max.value_or(256.0), c.u_points.value_or(9))) {
    u.push_back(v);
  }
  write_csv_preamble(out.stream(), c.describe("norm-growth") + " exponent=" + c.exponent,
                     {"u", "norm_ratio"});
  for (double v : u) {
    out.stream() << csv_number(v) << ',' << csv_number(imaginary_power_norm_ratio(f, p, v)) << '\n';
  }
  out.commit();
  return kSuccess;
}

int cmd_spherical_max(const Config& c, Output& out) {
  const auto g = c.geometry();
  const auto f = test_function(c, g);
  const auto t_grid = t_grid_from(c, default_t_grid(g));
  const auto sup = spherical_maximal(f, c.alpha, t_grid);
  std::optional<GridFunction> hl;
  if (c.with_hl) hl = hardy_littlewood_maximal(f, default_radii(g));

  std::vector<std::string> columns{"node"};
  for (int a = 0; a < g.dim; ++a) columns.push_back("x" + std::to_string(a));
  for (const char* name : {"f_abs", "spherical_max", "argmax_t", "t_at_max"}) columns.push_back(name);
  if (hl) columns.push_back("hardy_littlewood");
  write_csv_preamble(out.stream(), c.describe("spherical-max") + " t_points=" + std::to_string(t_grid.size()),
                     columns);
  for (std::size_t i = 0; i < g.point_count(); ++i) {
    out.stream() << i;
    for (double x : g.centered_coordinate(i)) out.stream() << ',' << csv_number(x);
    out.stream() << ',' << csv_number(std::abs(f[i])) << ',' << csv_number(sup.values[i]) << ','
                 << sup.argmax_t[i] << ','
                 << csv_number(t_grid[static_cast<std::size_t>(sup.argmax_t[i])]);
    if (hl) out.stream() << ',' << csv_number((*hl)[i].real());
    out.stream() << '\n';
  }
  out.commit();
  return kSuccess;
}

int cmd_wave_demo(const Config& c, Output& out, std::ostream& err) {
  const auto g = c.geometry();
  const auto f = test_function(c, g);
  const auto cfg = make_wave_config(c.dim, t_grid_from(c, default_wave_t_grid(g)));
  const auto rows = wave_trace(f, cfg);
  write_csv_preamble(out.stream(), c.describe("wave-demo"), {"t", "l2_norm", "max_norm", "energy"});
  write_wave_trace_rows(out.stream(), rows);

  // FD oracle comparison at two step sizes.
  const double dt = fd_stability_bound(g);
  const auto exact = wave_propagate(f, c.fd_time, cfg);
  const double e1 = wave_fd_oracle(f, c.fd_time, dt).minus(exact).l2_norm();
  const double e2 = wave_fd_oracle(f, c.fd_time, dt / 2).minus(exact).l2_norm();
  const double ratio = e2 > 0.0 ? e1 / e2 : std::numeric_limits<double>::infinity();
  const double apriori = a_priori_ratio(f, exponent_from(c, g), cfg);

  double e_min = rows.front().energy, e_max = rows.front().energy;
  for (const auto& r : rows) {
    e_min = std::min(e_min, r.energy);
    e_max = std::max(e_max, r.energy);
  }
  const double drift = e_max > 0.0 ? (e_max - e_min) / e_max : 0.0;

  nlohmann::json report;
  report["config"] = c.describe("wave-demo");
  report["n"] = cfg.n;
  report["alpha"] = cfg.alpha;
  report["c_n"] = cfg.c_n;
  report["fd"] = {{"time", c.fd_time}, {"dt", dt}, {"error_dt", e1}, {"error_half_dt", e2}, {"ratio", ratio}};
  report["a_priori_ratio"] = apriori;
  report["exponent"] = c.exponent;
  report["relative_energy_drift"] = drift;
  if (!c.report.empty()) {
    std::ofstream file(c.report, std::ios::binary);
    if (!file) throw FormatError("cannot write " + c.report);
    file << report.dump(2) << '\n';
  }
  out.commit();
  err << "fd_ratio=" << format_number(ratio) << " a_priori_ratio=" << format_number(apriori)
      << " energy_drift=" << format_number(drift) << '\n';
  if (c.strict && drift > 1e-8) {
    throw AccuracyWarning{"energy drift " + format_number(drift) + " exceeds 1e-8"};
  }
  return kSuccess;
}

int cmd_hypotheses(const Config& c, Output& out) {
  const auto g = c.geometry();
  const auto p = exponent_from(c, g);
  const auto report = check_bound_hypotheses(p, c.alpha, c.dim, parse_claim(c.claim));
  out.stream() << report.summary_line() << '\n';
  out.commit();
  if (!c.report.empty()) {
    std::ofstream file(c.report, std::ios::binary);
    if (!file) throw FormatError("cannot write " + c.report);
    file << report.to_json() << '\n';
  }
  return kSuccess;
}

int cmd_gen(const Config& c, Output& out) {
  const auto g = c.geometry();
  if (c.kind == "exponent") {
    write_exponent(out.stream(), exponent_from_builder(g, c.exponent));
  } else {
    Config copy = c;
    copy.function = c.kind;
    copy.input.clear();
    write_grid(out.stream(), test_function(copy, g));
  }
  out.commit();
  return kSuccess;
}

void error_line(std::ostream& err, const char* category, const std::string& message) {
  std::string flat = message;
  std::replace(flat.begin(), flat.end(), '\n', ' ');
  err << "error: " << category << ": " << flat << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral spherical-mean, Mellin and variable-exponent experiments", "spheremax"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolkitVersion);

  Config c;
  app.add_option("--dim", c.dim, "grid dimension n (1..4)")->capture_default_str();
  app.add_option("--size", c.size, "points per axis (power of two)")->capture_default_str();
  app.add_option("--side", c.side, "period L")->capture_default_str();
  app.add_option("--alpha", c.alpha, "spherical-mean order")->capture_default_str();
  app.add_option("--u-min", c.u_min, "smallest u");
  app.add_option("--u-max", c.u_max, "largest u");
  app.add_option("--u-points", c.u_points, "number of u samples");
  app.add_option("--t-min", c.t_min, "smallest t");
  app.add_option("--t-max", c.t_max, "largest t");
  app.add_option("--t-points", c.t_points, "number of t samples (geometric)");
  app.add_option("--exponent", c.exponent, "exponent file or builder (const:q, sine:m:a, step:lo:hi, radial:i:o:w)")
      ->capture_default_str();
  app.add_option("--seed", c.seed, "seed for random test functions")->capture_default_str();
  app.add_option("--out", c.out, "output path, '-' for stdout")->capture_default_str();
  app.add_flag("--strict", c.strict, "exit 3 on accuracy warnings");

  auto* mellin = app.add_subcommand("mellin-table", "A_alpha(u), closed form vs quadrature (CSV)");
  mellin->add_flag("--cited", c.cited, "also emit the literature variant");
  auto* decay = app.add_subcommand("decay-fit", "fitted decay exponent of |A_alpha(u)|");
  auto* recon = app.add_subcommand("reconstruct", "Mellin inversion error vs u_max (CSV)");
  recon->add_option("--lambda", c.lambda, "evaluation point")->capture_default_str();
  recon->add_option("--du", c.du, "u step")->capture_default_str();

  auto add_function_flags = [&c](CLI::App* sub) {
    sub->add_option("--function", c.function, "gaussian|random|plane")->capture_default_str();
    sub->add_option("--input", c.input, "grid file with the data");
    sub->add_option("--width", c.width, "Gaussian width as a fraction of L")->capture_default_str();
    sub->add_option("--cutoff", c.cutoff, "band limit for random data (default size/4)");
    sub->add_option("--k", c.k, "plane-wave index, comma separated")->capture_default_str();
  };
  auto* growth = app.add_subcommand("norm-growth", "u vs ||I_iu f|| / ||f|| in L^p(.) (CSV)");
  add_function_flags(growth);
  auto* smax = app.add_subcommand("spherical-max", "spherical maximal function and argmax map (CSV)");
  add_function_flags(smax);
  smax->add_flag("--hl", c.with_hl, "add the Hardy-Littlewood maximal function column");
  auto* wave = app.add_subcommand("wave-demo", "wave traces, FD-oracle comparison, a priori ratio");
  add_function_flags(wave);
  wave->add_option("--fd-time", c.fd_time, "time of the FD comparison")->capture_default_str();
  wave->add_option("--report", c.report, "JSON summary path");
  auto* hyp = app.add_subcommand("hypotheses", "range checks and witnesses");
  hyp->add_option("--claim", c.claim, "thm32|thm34|cor35|cor36_wave")->capture_default_str();
  hyp->add_option("--report", c.report, "JSON report path");
  auto* gen = app.add_subcommand("gen", "write a test function or exponent file");
  add_function_flags(gen);
  gen->add_option("--kind", c.kind, "gaussian|random|plane|exponent")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_line(err, "usage", e.what());
    return kPrecondition;
  }

  Output output(c.out, out);
  try {
    if (mellin->parsed()) return cmd_mellin_table(c, output);
    if (decay->parsed()) return cmd_decay_fit(c, output);
    if (recon->parsed()) return cmd_reconstruct(c, output);
    if (growth->parsed()) return cmd_norm_growth(c, output);
    if (smax->parsed()) return cmd_spherical_max(c, output);
    if (wave->parsed()) return cmd_wave_demo(c, output, err);
    if (hyp->parsed()) return cmd_hypotheses(c, output);
    if (gen->parsed()) return cmd_gen(c, output);
  } catch (const AccuracyWarning& w) {
    error_line(err, "accuracy", w.message);
    return kAccuracy;
  } catch (const PreconditionError& e) {
    error_line(err, "precondition", e.what());
    return kPrecondition;
  } catch (const FormatError& e) {
    error_line(err, "format", e.what());
    return kPrecondition;
  } catch (const MultiplierError& e) {
    error_line(err, "multiplier", e.what());
    return kFailure;
  } catch (const DomainError& e) {
    error_line(err, "domain", e.what());
    return kFailure;
  } catch (const NumericalError& e) {
    error_line(err, "numerical", e.what());
    return kFailure;
  } catch (const std::exception& e) {
    error_line(err, "internal", e.what());
    return kFailure;
  }
  error_line(err, "usage", "no subcommand");
  return kPrecondition;
}

}  // namespace spheremax::cli
