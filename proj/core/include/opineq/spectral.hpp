#pragma once

#include <functional>

#include "opineq/eigh.hpp"
#include "opineq/sym_matrix.hpp"
#include "opineq/tolerance.hpp"

namespace opineq {

/// f applied through the spectral theorem: U f(Lambda) U^T.
/// Throws SpectralDomainError if f is non-finite at some eigenvalue.
SymMatrix matfun(const SymMatrix& a, const std::function<double(double)>& f);

/// A^p for PSD A.
///
/// Integer p (p == round(p)) acts on eigenvalues directly with no domain
/// restriction. Fractional p requires A to be PSD up to tol: eigenvalues
/// below -psd_tol (scaled) throw NotPsdError, and those in the tolerance
/// band are clamped to kClampFloor so that negative powers stay finite on
/// nominally-singular input.
SymMatrix power(const SymMatrix& a, double p, const ToleranceSpec& tol = {});

/// Matrix logarithm with the same clamping policy as fractional power.
SymMatrix log(const SymMatrix& a, const ToleranceSpec& tol = {});

/// Matrix exponential (entire, no domain restriction).
SymMatrix exp(const SymMatrix& a);

/// A^k by repeated multiplication, k >= 0. Independent of eigh; used to
/// cross-check spectral powers.
SymMatrix power_integer_exact(const SymMatrix& a, int k);

double spectral_radius(const SymMatrix& a);
double min_eigenvalue(const SymMatrix& a);

/// Outcome of a Loewner comparison A <= B.
struct LoewnerResult {
  bool leq = false;       ///< gap >= -effective tolerance
  double gap = 0.0;       ///< smallest eigenvalue of B - A
  double scale = 1.0;     ///< max(1, spectral radius of A, of B) when rel_scale
};

/// Tests A <= B in the Loewner order via the smallest eigenvalue of B - A.
LoewnerResult loewner_leq(const SymMatrix& a, const SymMatrix& b,
                          const ToleranceSpec& tol = {});

}  // namespace opineq
