#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opineq/means.hpp"
#include "opineq/report.hpp"
#include "opineq/sequence.hpp"
#include "opineq/tolerance.hpp"

namespace opineq {

/// Averaging-operator inequality in the Loewner order,
///   sum_{n<=M} h(a)_n^p <= (p/(p-1))^p * sum_n a_n^p,
/// where h(a)_n is the running average. Valid for 1 < p <= 2 (operator
/// convexity of t^p); larger p belongs to check_tracial_hardy. The LHS is
/// evaluated at truncation length M >= N (0 picks the default M = 2N, which
/// covers the region where a has ended but its averages have not).
InequalityReport check_discrete_hardy(const OperatorSequence& a, double p,
                                      const ToleranceSpec& tol = {},
                                      int truncation = 0);

/// Trace form of the same inequality, valid for every p > 1.
InequalityReport check_tracial_hardy(const OperatorSequence& a, double p,
                                     const ToleranceSpec& tol = {},
                                     int truncation = 0);

/// Trace p-norm bound for the averaging operator,
///   phi(h(a), p) <= p/(p-1) * phi(a, p),  phi(a, p) = Tr[(sum a_n^p)^(1/p)],
/// for 1 < p <= 2.
InequalityReport check_phi_bound(const OperatorSequence& a, double p,
                                 const ToleranceSpec& tol = {},
                                 int truncation = 0);

/// Which characterization of the tracial geometric mean a Carleman check
/// uses: the power-mean limit (works for singular PSD input) or the
/// log-exp closed form (strictly positive input only, much faster).
enum class TgMode { limit, logexp };

/// Carleman-type bound: sum_{n<=N} TG(a_1..a_n) <= e * sum_{n<=N} Tr a_n,
/// with TG the tracial geometric mean of the prefix. In logexp mode the
/// prefix means reuse a running sum of logarithms, so the whole check is
/// O(N) spectral decompositions.
InequalityReport check_carleman(const OperatorSequence& a,
                                const ToleranceSpec& tol = {},
                                TgMode mode = TgMode::limit,
                                const PSchedule& schedule = {});

/// Randomized verification campaign: `trials` independent sequences per
/// named checker, sampled from seeds derived per (checker, trial), so
/// results are reproducible and independent of execution order and thread
/// count.
struct SuiteSpec {
  std::vector<std::string> checkers = {"discrete_hardy", "tracial_hardy",
                                       "phi_bound", "carleman"};
  int trials = 1000;
  std::vector<int> dims = {1, 2, 3, 4, 5, 6};
  /// When non-empty, p is drawn from this grid instead of the checker's
  /// default range ((1, 2] for the Loewner checks, (1, 8] for the tracial).
  std::vector<double> p_grid;
  int max_terms = 64;   ///< N drawn uniformly from [1, max_terms]
  int truncation = 0;   ///< M; 0 = per-check default 2N
  std::uint64_t seed = 0;
  ToleranceSpec tol;
  int threads = 0;      ///< 0 = hardware default (still capped by OPINEQ_THREADS)

  void validate() const;
};

/// Runs the campaign; reports come back grouped by checker in spec order,
/// trials in index order. Unknown checker names are rejected up front.
std::vector<InequalityReport> run_suite(const SuiteSpec& spec);

struct CheckerSummary {
  std::string name;
  int count = 0;
  int passes = 0;
  double min_gap = 0.0;
  double best_ratio = 0.0;  ///< largest ratio seen; closeness to 1 = sharpness
};

struct SuiteSummary {
  std::vector<CheckerSummary> checkers;
  int total = 0;
  int passes = 0;
};

SuiteSummary summarize(const std::vector<InequalityReport>& reports);

}  // namespace opineq
