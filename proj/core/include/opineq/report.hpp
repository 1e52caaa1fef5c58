#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace opineq {

/// Verdict of one inequality check. The inequalities verified here are
/// theorems, so `fail` means numerical trouble, not a counterexample;
/// `inconclusive` flags gaps slightly below tolerance that call for a
/// tighter tolerance rather than a verdict.
enum class CheckStatus { pass, inconclusive, fail };

const char* to_string(CheckStatus s) noexcept;

/// One inequality comparison, LHS <= C * RHS, reduced to numbers:
/// `gap` is the smallest eigenvalue of RHS_total - LHS (Loewner checks) or
/// the plain difference of traces (scalar checks), so gap >= 0 means the
/// inequality held with room to spare. `ratio` is trace(LHS)/trace(C*RHS)
/// when the denominator is positive, a sharpness measure in [0, 1].
struct InequalityReport {
  std::string name;
  bool passed = false;
  CheckStatus status = CheckStatus::fail;
  double gap = 0.0;
  std::optional<double> ratio;
  double p = 0.0;
  int dim = 0;
  int n_terms = 0;     ///< N, the sequence length
  int truncation = 0;  ///< M, the evaluation length (0 when not applicable)
  std::uint64_t seed = 0;
  double tolerance = 0.0;
};

/// Fills status/passed from gap and tolerance: pass at gap >= -tol,
/// fail below -10*tol, inconclusive in between.
InequalityReport make_report(std::string name, double gap, double tolerance);

/// Serialization is hand-rolled with a fixed field order and %.17g floats:
/// identical reports give byte-identical output, and doubles round-trip.
std::string to_json(const InequalityReport& report);
std::string to_json(const std::vector<InequalityReport>& reports);
std::string to_csv(const std::vector<InequalityReport>& reports);

}  // namespace opineq
