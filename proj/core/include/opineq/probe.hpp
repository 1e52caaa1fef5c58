#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opineq/rng.hpp"
#include "opineq/sequence.hpp"
#include "opineq/tolerance.hpp"

namespace opineq {

/// Outcome of a sharpness probe: how close a family of sequences pushes the
/// trace ratio LHS/RHS (constant excluded) toward the inequality's
/// constant. `trace` records the (N, ratio) pairs visited, for plotting the
/// slow approach to the constant.
struct ProbeResult {
  std::string family;
  double target_constant = 0.0;
  double best_ratio = 0.0;
  std::optional<OperatorSequence> achiever;
  long long iterations = 0;
  bool converged = false;
  std::vector<std::pair<long long, double>> trace;
  double p = 0.0;
  int dim = 1;
  int n_terms = 0;
  std::uint64_t seed = 0;
};

/// Ratio achieved by the classical near-extremal scalar family
/// a_n = n^(-1/p), evaluated purely in scalar arithmetic at truncation
/// M = 4N. The trace covers N' in {100, 1000, 10000, 100000} up to N, plus
/// N itself; the ratio climbs toward (p/(p-1))^p logarithmically slowly.
/// Requires p > 1 and N >= 2.
ProbeResult extremal_family_ratio(double p, long long n);

/// Derivative-free random-restart ascent of the trace ratio over sequences
/// a_n = c_n * R_n B R_n^T: a scalar profile c_n (seeded with n^(-1/p)), a
/// per-restart PSD direction B, and optional per-term rotations R_n.
/// Restart 0 uses B = I with no rotations, so the result never falls below
/// the extremal family's ratio. `budget` counts ratio evaluations across
/// all restarts; 0 returns the seed ratio unchanged. The Loewner-range
/// guard (p <= 2) is dropped when `tracial` is set.
ProbeResult sharpness_optimize(double p, int dim, int n, long long budget, Rng& rng,
                               bool tracial = false, int restarts = 16,
                               bool rotations = true);

/// What a violation hunt at p > 2 produced. `found` means some candidate
/// dipped below -10x tolerance during the search; `verified` means the
/// candidate's gap survived re-evaluation through exact repeated matrix
/// multiplication (integer p) or a 10x tighter tolerance. An unverified
/// candidate is numerically spurious, not evidence.
struct ViolationSearchResult {
  bool found = false;
  bool verified = false;
  double best_gap = 0.0;
  double verified_gap = 0.0;
  std::optional<OperatorSequence> candidate;
  long long samples = 0;
  int trials = 0;
  double p = 0.0;
  int dim = 0;
  int n_terms = 0;
  std::uint64_t seed = 0;
};

/// Hill-climbs sequences toward a negative smallest eigenvalue of
/// RHS - LHS of the Loewner averaging inequality at p > 2, outside the
/// range where the inequality is claimed. p <= 2 is rejected: a violation
/// there would mean a bug, not a discovery. Requires dim >= 2.
ViolationSearchResult search_loewner_violation(double p, int dim, int n, int trials,
                                               Rng& rng, const ToleranceSpec& tol = {});

/// Prefix geometric-mean to arithmetic-sum ratios of the scalar family
/// a_n = 1/n over the given N grid (default {1, 10, 100, 1000, 10000}).
/// The ratios increase along the grid and stay below the constant e.
ProbeResult carleman_constant_probe(const std::vector<long long>& n_grid = {});

}  // namespace opineq
