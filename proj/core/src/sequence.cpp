#include "opineq/sequence.hpp"

#include <stdexcept>
#include <utility>

#include "opineq/spectral.hpp"

namespace opineq {

OperatorSequence::OperatorSequence(std::vector<SymMatrix> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw std::invalid_argument("OperatorSequence: need at least one term");
  }
  const int d = terms_.front().dim();
  for (const SymMatrix& t : terms_) {
    if (t.dim() != d) {
      throw std::invalid_argument("OperatorSequence: mixed dimensions");
    }
  }
}

OperatorSequence OperatorSequence::from_scalars(std::span<const double> values) {
  std::vector<SymMatrix> terms;
  terms.reserve(values.size());
  for (const double v : values) terms.push_back(SymMatrix(1, {v}));
  return OperatorSequence(std::move(terms));
}

std::optional<int> OperatorSequence::first_non_psd(const ToleranceSpec& tol) const {
  tol.validate();
  for (int n = 1; n <= size(); ++n) {
    const SymMatrix& t = (*this)[n];
    if (min_eigenvalue(t) < -tol.effective(spectral_radius(t))) return n;
  }
  return std::nullopt;
}

OperatorSequence hardy_transform(const OperatorSequence& a) {
  std::vector<SymMatrix> out;
  out.reserve(static_cast<std::size_t>(a.size()));
  SymMatrix prefix(a.dim());
  for (int n = 1; n <= a.size(); ++n) {
    prefix += a[n];
    out.push_back(prefix / static_cast<double>(n));
  }
  return OperatorSequence(std::move(out));
}

SymMatrix power_sum(const OperatorSequence& a, double p, const ToleranceSpec& tol) {
  if (!(p > 0.0)) throw std::invalid_argument("power_sum: p must be > 0");
  SymMatrix sum(a.dim());
  for (int n = 1; n <= a.size(); ++n) sum += power(a[n], p, tol);
  return sum;
}

OperatorSequence truncate_extend(const OperatorSequence& a, int m) {
  if (m < 1) throw std::invalid_argument("truncate_extend: length must be >= 1");
  std::vector<SymMatrix> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int n = 1; n <= m; ++n) {
    out.push_back(n <= a.size() ? a[n] : SymMatrix(a.dim()));
  }
  return OperatorSequence(std::move(out));
}

OperatorSequence scaled(const OperatorSequence& a, double t) {
  std::vector<SymMatrix> out;
  out.reserve(static_cast<std::size_t>(a.size()));
  for (int n = 1; n <= a.size(); ++n) out.push_back(a[n] * t);
  return OperatorSequence(std::move(out));
}

}  // namespace opineq
