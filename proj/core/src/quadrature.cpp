#include "opineq/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opineq {

void QuadratureSpec::validate() const {
  if (nodes_per_segment < 2) {
    throw std::invalid_argument("QuadratureSpec: nodes_per_segment must be >= 2");
  }
  if (refinement < 1) {
    throw std::invalid_argument("QuadratureSpec: refinement must be >= 1");
  }
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));

  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess for the i-th root of P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Evaluate P_n and P_{n-1} by the three-term recurrence.
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

namespace {

SymMatrix pairwise_mat(std::span<const SymMatrix> terms) {
  if (terms.size() == 1) return terms.front();
  if (terms.size() == 2) return terms[0] + terms[1];
  const std::size_t half = terms.size() / 2;
  return pairwise_mat(terms.subspan(0, half)) + pairwise_mat(terms.subspan(half));
}

double pairwise_scalar(std::span<const double> terms) {
  if (terms.size() == 1) return terms.front();
  if (terms.size() == 2) return terms[0] + terms[1];
  const std::size_t half = terms.size() / 2;
  return pairwise_scalar(terms.subspan(0, half)) + pairwise_scalar(terms.subspan(half));
}

}  // namespace

SymMatrix pairwise_sum(std::span<const SymMatrix> terms) {
  if (terms.empty()) throw std::invalid_argument("pairwise_sum: empty input");
  return pairwise_mat(terms);
}

double pairwise_sum(std::span<const double> terms) {
  if (terms.empty()) return 0.0;
  return pairwise_scalar(terms);
}

}  // namespace opineq
