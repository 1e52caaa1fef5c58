#pragma once

#include <optional>
#include <vector>

#include "opineq/quadrature.hpp"
#include "opineq/report.hpp"
#include "opineq/sym_matrix.hpp"
#include "opineq/tolerance.hpp"

namespace opineq {

/// Integration weight on (0, infinity): plain dx or the scale-invariant
/// dx/x.
enum class Weight { DX, DX_OVER_X };

/// Piecewise-constant matrix-valued function on (0, infinity): value v_j on
/// (x_{j-1}, x_j], zero below x_0 and above x_m. Vanishing near 0 keeps the
/// dx/x integrals finite; vanishing at infinity makes the tail of the
/// averaged function exactly S/x, which is integrated in closed form.
class StepOperatorFunction {
 public:
  /// breakpoints x_0 < ... < x_m (positive, strictly increasing, one more
  /// entry than values); values[j] lives on (x_j, x_{j+1}].
  StepOperatorFunction(std::vector<double> breakpoints, std::vector<SymMatrix> values);

  int dim() const noexcept { return values_.front().dim(); }
  int segments() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<SymMatrix>& values() const noexcept { return values_; }
  double support_min() const noexcept { return breakpoints_.front(); }
  double support_max() const noexcept { return breakpoints_.back(); }

  /// g(x); zero matrix outside the support.
  SymMatrix value_at(double x) const;

  /// Integral of g over (0, x], exact from cached prefix integrals.
  SymMatrix integral_to(double x) const;

  /// S = integral of g over all of (0, infinity).
  const SymMatrix& total_integral() const noexcept { return prefix_.back(); }

  /// 0-based index of the first segment value failing the PSD test, if any.
  std::optional<int> first_non_psd(const ToleranceSpec& tol = {}) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<SymMatrix> values_;
  std::vector<SymMatrix> prefix_;  ///< prefix_[j] = integral up to x_j
};

/// A(x) = (1/x) * integral of g over (0, x]; the zero matrix for x <= x_0.
SymMatrix cumulative_average(const StepOperatorFunction& g, double x);

/// Integral of A(x)^p against the weight over (0, infinity): composite
/// Gauss-Legendre on [x_0, x_m] plus the exact closed-form tail, where
/// A(x) = S/x. Requires p > 1 for DX (the tail diverges otherwise) and
/// p > 0 for DX_OVER_X.
SymMatrix integral_avg_power(const StepOperatorFunction& g, double p, Weight weight,
                             const QuadratureSpec& quad = {},
                             const ToleranceSpec& tol = {});

/// Integral of g(x)^p against the weight, exact: g is constant per segment,
/// so this is a finite sum of powered values times segment measures.
SymMatrix integral_power(const StepOperatorFunction& g, double p, Weight weight,
                         const ToleranceSpec& tol = {});

/// Loewner comparison of the averaged p-th power against the p-th power,
/// both under dx/x: integral_avg_power(g, p, DX_OVER_X) <= integral_power(
/// g, p, DX_OVER_X). Claimed for 1 <= p <= 2 only (operator convexity of
/// t^p fails beyond 2).
InequalityReport check_lemma_convexity(const StepOperatorFunction& g, double p,
                                       const ToleranceSpec& tol = {},
                                       const QuadratureSpec& quad = {});

/// Trace version of the same comparison; holds for every p >= 1.
InequalityReport check_lemma_tracial(const StepOperatorFunction& g, double p,
                                     const ToleranceSpec& tol = {},
                                     const QuadratureSpec& quad = {});

/// The continuous averaging inequality with its sharp constant:
/// integral_avg_power(f, p, DX) <= (p/(p-1))^p * integral_power(f, p, DX),
/// in the Loewner order for 1 < p <= 2, or under the trace for any p > 1
/// when `tracial` is set.
InequalityReport check_theorem_continuous(const StepOperatorFunction& f, double p,
                                          const ToleranceSpec& tol = {},
                                          bool tracial = false,
                                          const QuadratureSpec& quad = {});

}  // namespace opineq
