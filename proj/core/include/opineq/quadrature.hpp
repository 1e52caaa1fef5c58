#pragma once

#include <span>
#include <vector>

#include "opineq/sym_matrix.hpp"

namespace opineq {

/// Controls the composite Gauss-Legendre scheme used for weighted integrals
/// of step-function averages. Each step segment is split into `refinement`
/// pieces of `nodes_per_segment` nodes each; the integrator chooses the
/// piece boundaries (geometrically graded toward each segment's left edge,
/// where the integrand can lose smoothness).
struct QuadratureSpec {
  int nodes_per_segment = 32;
  int refinement = 8;

  void validate() const;
};

/// Nodes and weights on the reference interval [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, computed by Newton iteration on the
/// Legendre recurrence. Deterministic; exact for polynomials up to degree
/// 2n - 1.
QuadratureRule gauss_legendre(int n);

/// Sum with a fixed pairwise (recursive halving) tree. The association
/// order depends only on the element count, so totals are bit-reproducible
/// regardless of how the terms were produced.
SymMatrix pairwise_sum(std::span<const SymMatrix> terms);
double pairwise_sum(std::span<const double> terms);

}  // namespace opineq
