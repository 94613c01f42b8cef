#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spheremax/varlp.hpp"

namespace spheremax {

enum class BoundClaim {
  thm32,       // M^α bounded when p̃ from the interpolation lemma is admissible
  thm34,       // n/(n−1+α) < p− ≤ p+ < p−(n−1+α)/(1−α), 0 ≤ α < 1
  cor35,       // α = 0: n/(n−1) < p− ≤ p+ < p−(n−1), n ≥ 3
  cor36_wave,  // 2n/(n+1) < p− ≤ p+ < 2n/(n−1) for the wave a priori estimate
};

BoundClaim parse_claim(const std::string& name);
std::string claim_name(BoundClaim claim);

struct HypothesisEntry {
  std::string name;
  std::string statement;
  bool holds = false;
  bool binding = true;  // non-binding entries are reported but do not fail the claim
};

struct GammaWitness {
  double gamma = 0.0;       // midpoint of the feasible interval
  double gamma_upper = 0.0;
  double pbar_minus = 0.0;  // p̄(x) = p(x)·nγ/(p−(n−1+α))
  double pbar_plus = 0.0;
};

struct InterpolationWitness {
  double theta = 0.0;
  double theta0 = 0.0;
  double delta = 0.0;
  double ptilde_minus = 0.0;
  double ptilde_plus = 0.0;
};

struct HypothesisReport {
  BoundClaim claim = BoundClaim::cor35;
  double alpha = 0.0;
  int n = 0;
  bool pass = false;
  double lower = 0.0;  // strict lower bound on p−
  double p_minus = 0.0;
  double p_plus = 0.0;
  double upper = 0.0;  // strict upper bound on p+ (may be ∞)
  std::vector<HypothesisEntry> entries;
  std::optional<GammaWitness> gamma_witness;
  std::optional<InterpolationWitness> interpolation_witness;
  std::vector<std::string> notes;

  /// "pass 1.5 < 2 <= 2 < 4"
  std::string summary_line() const;
  std::string to_json() const;
};

/// Range checks for the boundedness claims, evaluated with exact rational
/// arithmetic on the binary values of p±, α and n. Never throws for failing
/// hypotheses; failures are report entries.
HypothesisReport check_bound_hypotheses(const VariableExponent& p, double alpha, int n,
                                        BoundClaim claim);

/// Shortest decimal that round-trips to the same double.
std::string format_number(double v);

}  // namespace spheremax
