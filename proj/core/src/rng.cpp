#include "opineq/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace opineq {

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  // Rejection-free modulo is fine here: span is tiny relative to 2^64, so
  // the bias is far below anything observable.
  return lo + static_cast<int>(next_u64() % span);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream,
                          std::uint64_t counter) {
  std::uint64_t h = splitmix64(root);
  h = splitmix64(h ^ (0x9e3779b97f4a7c15ULL + stream));
  h = splitmix64(h ^ (0xbf58476d1ce4e5b9ULL + counter));
  return h;
}

SymMatrix random_psd(int dim, int rank, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("random_psd: dim must be >= 1");
  if (rank < 1 || rank > dim) {
    throw std::invalid_argument("random_psd: rank must be in [1, dim]");
  }
  // G is rank x dim, filled row by row; the draw order is part of the
  // reproducibility contract.
  std::vector<double> g(static_cast<std::size_t>(rank) * dim);
  for (double& x : g) x = rng.normal();

  SymMatrix out(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = 0.0;
      for (int r = 0; r < rank; ++r) {
        sum += g[static_cast<std::size_t>(r) * dim + i] *
               g[static_cast<std::size_t>(r) * dim + j];
      }
      out.set(i, j, sum);
    }
  }
  return out;
}

SymMatrix random_spd(int dim, double min_eig, Rng& rng) {
  if (min_eig <= 0.0) throw std::invalid_argument("random_spd: min_eig must be > 0");
  SymMatrix out = random_psd(dim, dim, rng);
  for (int i = 0; i < dim; ++i) out.set(i, i, out(i, i) + min_eig);
  return out;
}

DenseMatrix random_orthogonal(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("random_orthogonal: dim must be >= 1");
  DenseMatrix q(dim);
  // Columns: Gaussian draw, then modified Gram-Schmidt against the
  // previous columns. Retry a column in the (measure-zero) degenerate case.
  for (int col = 0; col < dim; ++col) {
    while (true) {
      for (int i = 0; i < dim; ++i) q(i, col) = rng.normal();
      for (int prev = 0; prev < col; ++prev) {
        double dot = 0.0;
        for (int i = 0; i < dim; ++i) dot += q(i, col) * q(i, prev);
        for (int i = 0; i < dim; ++i) q(i, col) -= dot * q(i, prev);
      }
      double norm = 0.0;
      for (int i = 0; i < dim; ++i) norm += q(i, col) * q(i, col);
      norm = std::sqrt(norm);
      if (norm > 1e-8) {
        for (int i = 0; i < dim; ++i) q(i, col) /= norm;
        break;
      }
    }
  }
  return q;
}

}  // namespace opineq
