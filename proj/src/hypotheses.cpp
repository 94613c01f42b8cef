#include "spheremax/hypotheses.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <optional>
#include <cstdio>
#include <json.hpp>

#include "spheremax/errors.hpp"

namespace spheremax {

namespace {

using Rational = boost::multiprecision::cpp_rational;

Rational exact(double v) { return Rational(v); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

struct Checker {
  HypothesisReport& report;

  void strict(const std::string& name, const std::string& lhs_label, const Rational& lhs,
              const std::string& rhs_label, const Rational& rhs, bool binding = true) {
    HypothesisEntry e;
    e.name = name;
    e.holds = lhs < rhs;
    e.binding = binding;
    e.statement = lhs_label + " = " + format_number(to_double(lhs)) + " < " + rhs_label + " = " +
                  format_number(to_double(rhs));
    report.entries.push_back(std::move(e));
  }

  void flag(const std::string& name, bool holds, const std::string& statement,
            bool binding = true) {
    report.entries.push_back(HypothesisEntry{name, statement, holds, binding});
  }
};

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

BoundClaim parse_claim(const std::string& name) {
  if (name == "thm32") return BoundClaim::thm32;
  if (name == "thm34") return BoundClaim::thm34;
  if (name == "cor35") return BoundClaim::cor35;
  if (name == "cor36_wave") return BoundClaim::cor36_wave;
  throw PreconditionError("unknown claim '" + name + "' (thm32|thm34|cor35|cor36_wave)");
}

std::string claim_name(BoundClaim claim) {
  switch (claim) {
    case BoundClaim::thm32: return "thm32";
    case BoundClaim::thm34: return "thm34";
    case BoundClaim::cor35: return "cor35";
    case BoundClaim::cor36_wave: return "cor36_wave";
  }
  return "unknown";
}

std::string HypothesisReport::summary_line() const {
  return std::string(pass ? "pass " : "fail ") + format_number(lower) + " < " +
         format_number(p_minus) + " <= " + format_number(p_plus) + " < " + format_number(upper);
}

std::string HypothesisReport::to_json() const {
  using nlohmann::json;
  auto number = [](double v) { return std::isfinite(v) ? json(v) : json(format_number(v)); };
  json j;
  j["claim"] = claim_name(claim);
  j["alpha"] = alpha;
  j["n"] = n;
  j["pass"] = pass;
  j["summary"] = summary_line();
  j["lower"] = number(lower);
  j["p_minus"] = number(p_minus);
  j["p_plus"] = number(p_plus);
  j["upper"] = number(upper);
  j["entries"] = json::array();
  for (const auto& e : entries) {
    j["entries"].push_back(
        {{"name", e.name}, {"statement", e.statement}, {"holds", e.holds}, {"binding", e.binding}});
  }
  if (gamma_witness) {
    j["witnesses"]["gamma"] = gamma_witness->gamma;
    j["witnesses"]["gamma_upper"] = gamma_witness->gamma_upper;
    j["witnesses"]["pbar_minus"] = gamma_witness->pbar_minus;
    j["witnesses"]["pbar_plus"] = gamma_witness->pbar_plus;
  }
  if (interpolation_witness) {
    j["witnesses"]["theta"] = interpolation_witness->theta;
    j["witnesses"]["theta0"] = interpolation_witness->theta0;
    j["witnesses"]["delta"] = interpolation_witness->delta;
    j["witnesses"]["ptilde_minus"] = number(interpolation_witness->ptilde_minus);
    j["witnesses"]["ptilde_plus"] = number(interpolation_witness->ptilde_plus);
  }
  j["notes"] = notes;
  return j.dump(2);
}

HypothesisReport check_bound_hypotheses(const VariableExponent& p, double alpha, int n,
                                        BoundClaim claim) {
  HypothesisReport report;
  report.claim = claim;
  report.alpha = alpha;
  report.n = n;
  report.p_minus = p.p_minus();
  report.p_plus = p.p_plus();
  Checker check{report};

  const bool finite = !p.has_infinite_region() && std::isfinite(p.p_minus());
  check.flag("finite_exponent", finite,
             finite ? "p+ < inf on the whole grid" : "exponent has an L^inf region");
  if (n < 1 || !std::isfinite(alpha)) {
    check.flag("parameters", false, "need n >= 1 and finite alpha");
    report.pass = false;
    report.lower = report.upper = std::numeric_limits<double>::quiet_NaN();
    return report;
  }

  const Rational a = exact(alpha);
  const Rational nn = n;
  const Rational one = 1;
  // With an infinite region p+ is ∞ and every upper bound fails; use a huge
  // stand-in so the rational comparisons stay well-defined.
  const Rational pm = finite ? exact(p.p_minus()) : Rational(1);
  const Rational pp = finite ? exact(p.p_plus()) : Rational(boost::multiprecision::cpp_int(1) << 1000);

  auto upper_entry = [&](const std::string& label, const std::optional<Rational>& bound) {
    if (bound) {
      check.strict("upper_bound", "p+", pp, label, *bound);
      report.upper = to_double(*bound);
    } else {
      check.flag("upper_bound", finite, "p+ < " + label + " = inf");
      report.upper = std::numeric_limits<double>::infinity();
    }
  };

  switch (claim) {
    case BoundClaim::thm32: {
      check.strict("alpha_lower", "1-n/2", one - nn / 2, "alpha", a);
      check.strict("alpha_upper", "alpha", a, "1", one);
      const bool alpha_ok = (one - nn / 2 < a) && (a < one);
      const Rational lower = alpha_ok ? nn / (nn - one + a) : Rational(0);
      report.lower = to_double(lower);
      check.strict("lower_bound", "n/(n-1+alpha)", lower, "p-", pm);
      upper_entry("n/(1-alpha)", alpha_ok ? std::optional<Rational>(nn / (one - a)) : std::nullopt);
      report.notes.push_back(
          "membership of p~ in the maximal-operator class is a sufficient-condition check only "
          "(log-Hoelder)");
      break;
    }
    case BoundClaim::thm34: {
      check.flag("dimension", n >= 2, "n = " + std::to_string(n) + " >= 2");
      check.strict("alpha_upper", "alpha", a, "1", one);
      check.flag("alpha_lower", a >= 0, "alpha = " + format_number(alpha) + " >= 0");
      const bool alpha_ok = a >= 0 && a < one && nn - one + a > 0;
      const Rational lower = nn - one + a > 0 ? nn / (nn - one + a) : Rational(0);
      report.lower = to_double(lower);
      check.strict("lower_bound", "n/(n-1+alpha)", lower, "p-", pm);
      upper_entry("p-(n-1+alpha)/(1-alpha)",
                  alpha_ok ? std::optional<Rational>(pm * (nn - one + a) / (one - a)) : std::nullopt);
      break;
    }
    case BoundClaim::cor35: {
      check.flag("dimension", n >= 3, "n = " + std::to_string(n) + " >= 3");
      check.flag("alpha_zero", a == 0, "alpha = " + format_number(alpha) + " == 0");
      const Rational lower = n >= 2 ? nn / (nn - one) : Rational(0);
      report.lower = to_double(lower);
      check.strict("lower_bound", "n/(n-1)", lower, "p-", pm);
      upper_entry("p-(n-1)", pm * (nn - one));
      break;
    }
    case BoundClaim::cor36_wave: {
      // The empirical wave probes also run in n = 2, so the dimension entry
      // is reported without failing the claim.
      check.flag("dimension", n >= 3, "n = " + std::to_string(n) + " >= 3", false);
      check.flag("alpha_wave", a * 2 == Rational(3 - n),
                 "alpha = " + format_number(alpha) + " == (3-n)/2");
      const Rational lower = 2 * nn / (nn + one);
      report.lower = to_double(lower);
      check.strict("lower_bound", "2n/(n+1)", lower, "p-", pm);
      upper_entry("2n/(n-1)", n >= 2 ? std::optional<Rational>(2 * nn / (nn - one)) : std::nullopt);
      break;
    }
  }

  report.pass = true;
  for (const auto& e : report.entries) {
    if (e.binding && !e.holds) report.pass = false;
  }

  if (claim == BoundClaim::thm34 && report.pass) {
    // γ ∈ (1, p−(n−1+α)/n) with p+γ < p−(n−1+α)/(1−α); take the midpoint.
    const Rational k = pm * (nn - one + a);
    const Rational cap_a = k / nn;
    const Rational cap_b = k / ((one - a) * pp);
    const Rational cap = cap_a < cap_b ? cap_a : cap_b;
    if (cap > one) {
      const Rational gamma = (one + cap) / 2;
      GammaWitness w;
      w.gamma = to_double(gamma);
      w.gamma_upper = to_double(cap);
      w.pbar_minus = to_double(nn * gamma / (nn - one + a));
      w.pbar_plus = to_double(pp * nn * gamma / k);
      report.gamma_witness = w;
    }
  }
  if (claim == BoundClaim::thm32 && report.pass) {
    const auto t = exponent_transform(p, alpha, n);
    InterpolationWitness w{t.theta, t.theta0, t.delta, t.p_tilde.p_minus(), t.p_tilde.p_plus()};
    report.interpolation_witness = w;
    check.flag("ptilde_range", w.ptilde_minus > 1.0 && std::isfinite(w.ptilde_plus),
               "1 < p~- = " + format_number(w.ptilde_minus) +
                   " <= p~+ = " + format_number(w.ptilde_plus) + " < inf");
    if (!report.entries.back().holds) report.pass = false;
  }
  return report;
}

}  // namespace spheremax
