#pragma once

#include <span>
#include <utility>
#include <vector>

#include "opineq/sequence.hpp"
#include "opineq/sym_matrix.hpp"
#include "opineq/tolerance.hpp"

namespace opineq {

/// Exponent ladder for the p -> infinity limit behind the tracial geometric
/// mean. Defaults to 2^k, k = 0..14; convergence is declared when
/// successive Tr M_p values differ by less than cauchy_tol.
struct PSchedule {
  std::vector<double> exponents;
  double cauchy_tol = 1e-7;

  PSchedule();
  void validate() const;
};

/// M_p = ((1/n) sum a_k^(1/p))^p, the operator power mean. Requires p >= 1
/// and PSD inputs of one dimension.
SymMatrix power_mean(std::span<const SymMatrix> a, double p,
                     const ToleranceSpec& tol = {});

/// Outcome of the power-mean limit. `history` records every (p, Tr M_p)
/// pair visited, `value` the accepted limit and `p_used` where the Cauchy
/// criterion first fired (or the last exponent when it never did).
struct TgResult {
  double value = 0.0;
  bool converged = false;
  double p_used = 0.0;
  std::vector<std::pair<double, double>> history;
};

/// Tracial geometric mean as the decreasing limit of Tr M_p along the
/// schedule. Accepts singular PSD inputs. Tr M_p must be non-increasing
/// along the way; an increase beyond rounding slack throws
/// NumericalIntegrityError.
TgResult tg_limit(std::span<const SymMatrix> a, const PSchedule& schedule = {},
                  const ToleranceSpec& tol = {});

/// Closed form Tr exp((1/n) sum log a_k), valid for strictly positive
/// inputs only: any eigenvalue at or below psd_floor throws
/// StrictPositivityError rather than silently clamping.
double tg_logexp(std::span<const SymMatrix> a, double psd_floor = 1e-10);

/// Trace p-norm compound: Tr[(sum a_n^p)^(1/p)], p > 0.
double phi(const OperatorSequence& a, double p, const ToleranceSpec& tol = {});

}  // namespace opineq
