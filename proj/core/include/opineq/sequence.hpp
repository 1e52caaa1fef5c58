#pragma once

#include <optional>
#include <vector>

#include "opineq/sym_matrix.hpp"
#include "opineq/tolerance.hpp"

namespace opineq {

/// Finite tuple (a_1, ..., a_N) of symmetric matrices of one common
/// dimension; the domain of every summation inequality here.
///
/// Construction enforces only the structural invariants (N >= 1, equal
/// dimensions). Positivity is checked separately with first_non_psd so the
/// caller chooses the tolerance.
class OperatorSequence {
 public:
  explicit OperatorSequence(std::vector<SymMatrix> terms);

  /// Scalar sequence embedded as 1x1 matrices.
  static OperatorSequence from_scalars(std::span<const double> values);

  int dim() const noexcept { return terms_.front().dim(); }
  int size() const noexcept { return static_cast<int>(terms_.size()); }

  /// 1-based, matching the summation index convention used throughout.
  const SymMatrix& operator[](int n) const { return terms_.at(static_cast<std::size_t>(n - 1)); }

  const std::vector<SymMatrix>& terms() const noexcept { return terms_; }

  /// 1-based index of the first term whose smallest eigenvalue breaches
  /// -tol.effective(its radius); nullopt when every term is PSD.
  std::optional<int> first_non_psd(const ToleranceSpec& tol = {}) const;

 private:
  std::vector<SymMatrix> terms_;
};

/// The averaging transform h(a)_n = (a_1 + ... + a_n) / n.
OperatorSequence hardy_transform(const OperatorSequence& a);

/// a_1^p + ... + a_N^p.
SymMatrix power_sum(const OperatorSequence& a, double p, const ToleranceSpec& tol = {});

/// First min(N, m) terms, padded with zero matrices up to length m.
OperatorSequence truncate_extend(const OperatorSequence& a, int m);

/// (t * a_1, ..., t * a_N).
OperatorSequence scaled(const OperatorSequence& a, double t);

}  // namespace opineq
