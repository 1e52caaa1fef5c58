#include "opineq/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace opineq {

DenseMatrix::DenseMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("DenseMatrix: dim must be >= 1");
  data_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
}

DenseMatrix DenseMatrix::identity(int dim) {
  DenseMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("SymMatrix: dim must be >= 1");
  data_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
}

SymMatrix::SymMatrix(int dim, std::span<const double> row_major) : SymMatrix(dim) {
  if (row_major.size() != data_.size())
    throw std::invalid_argument("SymMatrix: expected dim*dim entries");
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = 0.5 * (row_major[idx(i, j)] + row_major[idx(j, i)]);
      data_[idx(i, j)] = v;
      data_[idx(j, i)] = v;
    }
  }
}

SymMatrix::SymMatrix(int dim, std::initializer_list<double> row_major)
    : SymMatrix(dim, std::span<const double>(row_major.begin(), row_major.size())) {}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> entries) {
  SymMatrix m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim(); ++i) m.set(i, i, entries[static_cast<std::size_t>(i)]);
  return m;
}

SymMatrix SymMatrix::diagonal(std::initializer_list<double> entries) {
  return diagonal(std::span<const double>(entries.begin(), entries.size()));
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("SymMatrix: dimension mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("SymMatrix: dimension mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(double s) noexcept {
  for (double& v : data_) v *= s;
  return *this;
}

double trace(const SymMatrix& a) {
  double t = 0.0;
  for (int i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const SymMatrix& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return std::sqrt(s);
}

double max_abs(const SymMatrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k) m = std::max(m, std::abs(da[k] - db[k]));
  return m;
}

SymMatrix direct_sum(const SymMatrix& a, const SymMatrix& b) {
  SymMatrix out(a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j <= i; ++j) out.set(i, j, a(i, j));
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j <= i; ++j) out.set(a.dim() + i, a.dim() + j, b(i, j));
  return out;
}

SymMatrix conjugate(const SymMatrix& a, const DenseMatrix& u) {
  const int n = a.dim();
  if (u.dim() != n) throw std::invalid_argument("conjugate: dimension mismatch");
  // w = u * a, then out = w * u^T; only the lower triangle of out is formed
  // and mirrored so the result is exactly symmetric.
  DenseMatrix w(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += u(i, k) * a(k, j);
      w(i, j) = s;
    }
  SymMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += w(i, k) * u(j, k);
      out.set(i, j, s);
    }
  return out;
}

}  // namespace opineq
