#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace opineq {

/// Dense square matrix, row-major. Not assumed symmetric; used for
/// eigenvector bases and orthogonal conjugations.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int dim);
  static DenseMatrix identity(int dim);

  int dim() const noexcept { return dim_; }
  double operator()(int i, int j) const noexcept { return data_[idx(i, j)]; }
  double& operator()(int i, int j) noexcept { return data_[idx(i, j)]; }
  std::span<const double> data() const noexcept { return data_; }

 private:
  std::size_t idx(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(j);
  }

  int dim_ = 0;
  std::vector<double> data_;
};

/// Dense real symmetric matrix with value semantics, the finite-dimensional
/// stand-in for a bounded self-adjoint operator.
///
/// The data constructor symmetrizes its input as (M + M^T)/2, so
/// a(i, j) == a(j, i) holds exactly, not just up to rounding. All
/// arithmetic operates entrywise and therefore preserves exact symmetry.
class SymMatrix {
 public:
  /// Zero matrix of the given dimension. dim must be >= 1.
  explicit SymMatrix(int dim);

  /// Builds from row-major data (dim*dim values), symmetrizing as (M + M^T)/2.
  SymMatrix(int dim, std::span<const double> row_major);
  SymMatrix(int dim, std::initializer_list<double> row_major);

  static SymMatrix identity(int dim);
  static SymMatrix diagonal(std::span<const double> entries);
  static SymMatrix diagonal(std::initializer_list<double> entries);

  int dim() const noexcept { return dim_; }
  double operator()(int i, int j) const noexcept { return data_[idx(i, j)]; }

  /// Writes both (i, j) and (j, i); the only mutating entry access.
  void set(int i, int j, double value) noexcept {
    data_[idx(i, j)] = value;
    data_[idx(j, i)] = value;
  }

  std::span<const double> data() const noexcept { return data_; }

  SymMatrix& operator+=(const SymMatrix& rhs);
  SymMatrix& operator-=(const SymMatrix& rhs);
  SymMatrix& operator*=(double s) noexcept;

  friend SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs) { return lhs += rhs; }
  friend SymMatrix operator-(SymMatrix lhs, const SymMatrix& rhs) { return lhs -= rhs; }
  friend SymMatrix operator*(SymMatrix lhs, double s) noexcept { return lhs *= s; }
  friend SymMatrix operator*(double s, SymMatrix rhs) noexcept { return rhs *= s; }
  friend SymMatrix operator/(SymMatrix lhs, double s) noexcept { return lhs *= 1.0 / s; }
  friend SymMatrix operator-(SymMatrix m) noexcept { return m *= -1.0; }

 private:
  std::size_t idx(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(j);
  }

  int dim_ = 1;
  std::vector<double> data_;
};

/// Sum of the diagonal entries.
double trace(const SymMatrix& a);

double frobenius_norm(const SymMatrix& a);
double max_abs(const SymMatrix& a);

/// Largest entrywise |a - b|; dimensions must match.
double max_abs_diff(const SymMatrix& a, const SymMatrix& b);

/// Block-diagonal direct sum a (+) b.
SymMatrix direct_sum(const SymMatrix& a, const SymMatrix& b);

/// u * a * u^T for a square u of matching dimension.
SymMatrix conjugate(const SymMatrix& a, const DenseMatrix& u);

}  // namespace opineq
