#pragma once

#include <stdexcept>
#include <string>

namespace opineq {

/// Jacobi sweeps exhausted before the off-diagonal mass fell below the
/// convergence threshold. Carries the residual for diagnostics.
class EighConvergenceError : public std::runtime_error {
 public:
  EighConvergenceError(double off_diagonal, int sweeps)
      : std::runtime_error("eigh: no convergence after " + std::to_string(sweeps) +
                           " sweeps, off-diagonal residual " + std::to_string(off_diagonal)),
        off_diagonal_(off_diagonal),
        sweeps_(sweeps) {}

  double off_diagonal() const noexcept { return off_diagonal_; }
  int sweeps() const noexcept { return sweeps_; }

 private:
  double off_diagonal_;
  int sweeps_;
};

/// Scalar function undefined (non-finite) at an eigenvalue of the argument.
class SpectralDomainError : public std::runtime_error {
 public:
  explicit SpectralDomainError(double eigenvalue, const std::string& what_fn = "matfun")
      : std::runtime_error(what_fn + ": function undefined at eigenvalue " +
                           std::to_string(eigenvalue)),
        eigenvalue_(eigenvalue) {}

  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// An eigenvalue fell below -psd_tol where positive semi-definiteness is required.
class NotPsdError : public std::runtime_error {
 public:
  explicit NotPsdError(double min_eigenvalue, const std::string& context = "")
      : std::runtime_error((context.empty() ? std::string("input") : context) +
                           " is not PSD: smallest eigenvalue " +
                           std::to_string(min_eigenvalue)),
        min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// Strictly positive input required (log-based geometric mean formula).
class StrictPositivityError : public std::runtime_error {
 public:
  StrictPositivityError(double min_eigenvalue, double floor)
      : std::runtime_error("strict positivity violated: smallest eigenvalue " +
                           std::to_string(min_eigenvalue) + " not above floor " +
                           std::to_string(floor)),
        min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// An internal consistency check failed, e.g. a trace power-mean sequence
/// that should decrease came out increasing beyond tolerance.
class NumericalIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or configuration; the message carries field/index
/// diagnostics.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace opineq
