#pragma once

#include <algorithm>
#include <stdexcept>

namespace opineq {

/// Eigenvalues of nominally-PSD inputs that land in [-psd_tol, kClampFloor]
/// are lifted to kClampFloor before fractional powers and logarithms.
inline constexpr double kClampFloor = 1e-12;

/// Shared tolerance policy for PSD checks and Loewner comparisons.
struct ToleranceSpec {
  /// Absolute eigenvalue floor: values above -psd_tol count as non-negative.
  double psd_tol = 1e-9;
  /// When set, thresholds scale by max(1, spectral radius of the operands).
  bool rel_scale = true;

  void validate() const {
    if (psd_tol < 0.0) throw std::invalid_argument("ToleranceSpec: psd_tol must be >= 0");
  }

  /// Effective absolute threshold for operands of the given spectral radius.
  double effective(double radius) const noexcept {
    return rel_scale ? psd_tol * std::max(1.0, radius) : psd_tol;
  }
};

}  // namespace opineq
