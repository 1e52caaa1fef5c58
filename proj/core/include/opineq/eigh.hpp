#pragma once

#include <vector>

#include "opineq/sym_matrix.hpp"

namespace opineq {

/// Spectral factorization A = V diag(eigenvalues) V^T with V orthogonal.
/// Eigenvalues are ascending; column j of `vectors` is the eigenvector for
/// eigenvalues[j]. The sign of each column is fixed by making its first
/// component of non-negligible magnitude positive, so decompositions are
/// deterministic for identical input.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  DenseMatrix vectors;

  double min_eigenvalue() const noexcept { return eigenvalues.front(); }
  double max_eigenvalue() const noexcept { return eigenvalues.back(); }
};

/// Cyclic Jacobi with threshold sweeps, capped at 100 sweeps.
/// Throws EighConvergenceError (carrying the off-diagonal residual) if the
/// cap is reached.
EigenDecomposition eigh(const SymMatrix& a);

/// Reassembles V diag(values) V^T, mirroring the lower triangle so the
/// result is exactly symmetric.
SymMatrix assemble(const EigenDecomposition& decomp, std::span<const double> values);

}  // namespace opineq
