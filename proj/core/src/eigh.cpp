#include "opineq/eigh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "opineq/errors.hpp"

namespace opineq {
namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = a[static_cast<std::size_t>(i) * n + j];
      sum += 2.0 * v * v;
    }
  }
  return std::sqrt(sum);
}

}  // namespace

EigenDecomposition eigh(const SymMatrix& m) {
  const int n = m.dim();
  EigenDecomposition out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.vectors = DenseMatrix::identity(n);

  if (n == 1) {
    out.eigenvalues[0] = m(0, 0);
    return out;
  }

  // Dense working copy; both triangles kept in sync by the rotations.
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(i) * n + j] = m(i, j);
    }
  }
  DenseMatrix& v = out.vectors;

  double frob = 0.0;
  for (const double x : a) frob += x * x;
  frob = std::sqrt(frob);
  const double target = std::max(1e-300, 1e-14 * frob);

  constexpr int kMaxSweeps = 100;
  const auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= target) break;
    double off_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off_sum += std::fabs(at(i, j));
    }

    // Skip rotations on tiny pivots during the first sweeps; afterwards
    // annihilate everything (classic threshold strategy).
    const double threshold =
        sweep < 3 ? 0.2 * off_sum / (static_cast<double>(n) * n) : 0.0;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::fabs(apq) <= threshold) continue;
        if (apq == 0.0) continue;

        const double app = at(p, p);
        const double aqq = at(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        double t;
        if (tau >= 0.0) {
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        } else {
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(p, k) = at(k, p);
          at(k, q) = s * akp + c * akq;
          at(q, k) = at(k, q);
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }

  }
  if (sweep == kMaxSweeps) {
    const double residual = off_diagonal_norm(a, n);
    if (residual > target) {
      throw EighConvergenceError(residual, kMaxSweeps);
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    const double di = at(i, i);
    const double dj = at(j, j);
    if (di != dj) return di < dj;
    return i < j;
  });

  DenseMatrix sorted(n);
  for (int col = 0; col < n; ++col) {
    const int src = order[static_cast<std::size_t>(col)];
    out.eigenvalues[static_cast<std::size_t>(col)] = at(src, src);
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
      const double x = v(k, src);
      if (std::fabs(x) > 1e-12) {
        sign = x > 0.0 ? 1.0 : -1.0;
        break;
      }
    }
    for (int k = 0; k < n; ++k) {
      sorted(k, col) = sign * v(k, src);
    }
  }
  out.vectors = std::move(sorted);
  return out;
}

SymMatrix assemble(const EigenDecomposition& decomp, std::span<const double> values) {
  const int n = decomp.vectors.dim();
  if (static_cast<int>(values.size()) != n) {
    throw std::invalid_argument("assemble: value count does not match dimension");
  }
  SymMatrix out(n);
  const DenseMatrix& u = decomp.vectors;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) {
        sum += u(i, k) * values[static_cast<std::size_t>(k)] * u(j, k);
      }
      out.set(i, j, sum);
    }
  }
  return out;
}

}  // namespace opineq
