#pragma once

// Sampled verification of the eight structural properties of the tracial
// geometric mean, shared by the unit tests and the acceptance gate. Inputs
// are strictly positive so the log-exp evaluation applies; its agreement
// with the limit characterization is checked separately.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "opineq/means.hpp"
#include "opineq/rng.hpp"
#include "opineq/spectral.hpp"
#include "opineq/sym_matrix.hpp"

namespace tgprops {

struct Outcome {
  int trials = 0;
  int violations = 0;
  std::vector<std::string> failures;  // first few, for diagnostics

  double max_commuting_error = 0.0;       // (1) vs Tr (a1...an)^(1/n), diagonal inputs
  double max_fixed_point_error = 0.0;     // (2) tg(a,...,a) = Tr a
  double max_homogeneity_error = 0.0;     // (3) tg(t a) = t tg(a)
  double max_permutation_error = 0.0;     // (4) symmetry in the entries
  double max_unitary_error = 0.0;         // (5) orthogonal conjugation invariance
  double max_block_additivity_error = 0.0;  // (6) direct sums add
  double min_monotonicity_slack = std::numeric_limits<double>::infinity();  // (7)
  double min_concavity_slack = std::numeric_limits<double>::infinity();     // (8)
};

namespace detail {

inline void record(Outcome& out, bool ok, const std::string& what, int trial) {
  if (ok) return;
  out.violations += 1;
  if (out.failures.size() < 10) {
    out.failures.push_back("trial " + std::to_string(trial) + ": " + what);
  }
}

inline std::vector<opineq::SymMatrix> sample_tuple(int n, int dim, opineq::Rng& rng) {
  std::vector<opineq::SymMatrix> a;
  a.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    a.push_back(opineq::random_spd(dim, 0.05, rng) * rng.uniform(0.25, 1.25));
  }
  return a;
}

}  // namespace detail

inline Outcome run(std::uint64_t seed, int trials) {
  using opineq::SymMatrix;
  Outcome out;
  out.trials = trials;

  for (int t = 0; t < trials; ++t) {
    opineq::Rng rng(opineq::derive_seed(seed, 41, static_cast<std::uint64_t>(t)));
    const int n = rng.uniform_int(2, 4);
    const int dim = rng.uniform_int(1, 4);
    const std::vector<SymMatrix> a = detail::sample_tuple(n, dim, rng);
    const double tg = opineq::tg_logexp(a);
    const double unit = std::max(1.0, std::fabs(tg));

    // (1) On a commuting (diagonal) tuple the mean collapses to the
    // classical geometric mean of the diagonal entries.
    {
      std::vector<SymMatrix> commuting;
      std::vector<double> product(static_cast<std::size_t>(dim), 1.0);
      for (int k = 0; k < n; ++k) {
        std::vector<double> entries(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
          entries[static_cast<std::size_t>(i)] = rng.uniform(0.1, 3.0);
          product[static_cast<std::size_t>(i)] *= entries[static_cast<std::size_t>(i)];
        }
        commuting.push_back(SymMatrix::diagonal(entries));
      }
      double reference = 0.0;
      for (int i = 0; i < dim; ++i) {
        reference += std::pow(product[static_cast<std::size_t>(i)],
                              1.0 / static_cast<double>(n));
      }
      const double err = std::fabs(opineq::tg_logexp(commuting) - reference);
      out.max_commuting_error = std::max(out.max_commuting_error, err);
      detail::record(out, err <= 1e-8 * std::max(1.0, reference),
                     "commuting equality error " + std::to_string(err), t);
    }

    // (2) Fixed point: every mean of copies of a is Tr a.
    {
      const std::vector<SymMatrix> copies(static_cast<std::size_t>(n), a.front());
      const double err = std::fabs(opineq::tg_logexp(copies) - opineq::trace(a.front()));
      out.max_fixed_point_error = std::max(out.max_fixed_point_error, err);
      detail::record(out, err <= 1e-8 * std::max(1.0, opineq::trace(a.front())),
                     "fixed-point error " + std::to_string(err), t);
    }

    // (3) Homogeneity under a common positive factor.
    {
      const double factor = rng.uniform(0.2, 3.0);
      std::vector<SymMatrix> scaled;
      for (const SymMatrix& ak : a) scaled.push_back(ak * factor);
      const double err = std::fabs(opineq::tg_logexp(scaled) - factor * tg);
      out.max_homogeneity_error = std::max(out.max_homogeneity_error, err);
      detail::record(out, err <= 1e-8 * std::max(1.0, factor * unit),
                     "homogeneity error " + std::to_string(err), t);
    }

    // (4) Symmetry: reversing the tuple changes nothing.
    {
      std::vector<SymMatrix> reversed(a.rbegin(), a.rend());
      const double err = std::fabs(opineq::tg_logexp(reversed) - tg);
      out.max_permutation_error = std::max(out.max_permutation_error, err);
      detail::record(out, err <= 1e-10 * unit,
                     "permutation error " + std::to_string(err), t);
    }

    // (5) Invariance under a common orthogonal conjugation.
    {
      const opineq::DenseMatrix u = opineq::random_orthogonal(dim, rng);
      std::vector<SymMatrix> rotated;
      for (const SymMatrix& ak : a) rotated.push_back(opineq::conjugate(ak, u));
      const double err = std::fabs(opineq::tg_logexp(rotated) - tg);
      out.max_unitary_error = std::max(out.max_unitary_error, err);
      detail::record(out, err <= 1e-8 * unit,
                     "orthogonal-invariance error " + std::to_string(err), t);
    }

    // (6) Direct sums act additively.
    {
      const std::vector<SymMatrix> b = detail::sample_tuple(n, dim, rng);
      std::vector<SymMatrix> blocks;
      for (int k = 0; k < n; ++k) {
        blocks.push_back(opineq::direct_sum(a[static_cast<std::size_t>(k)],
                                            b[static_cast<std::size_t>(k)]));
      }
      const double sum = tg + opineq::tg_logexp(b);
      const double err = std::fabs(opineq::tg_logexp(blocks) - sum);
      out.max_block_additivity_error = std::max(out.max_block_additivity_error, err);
      detail::record(out, err <= 1e-8 * std::max(1.0, sum),
                     "block-additivity error " + std::to_string(err), t);
    }

    // (7) Monotonicity: adding a PSD increment of norm <= 0.1 ||a_k|| to
    // each entry cannot decrease the mean.
    {
      std::vector<SymMatrix> bigger;
      for (const SymMatrix& ak : a) {
        SymMatrix inc = opineq::random_psd(dim, rng.uniform_int(1, dim), rng);
        const double norm = opineq::frobenius_norm(inc);
        if (norm > 0.0) {
          inc *= rng.uniform(0.0, 0.1) * opineq::frobenius_norm(ak) / norm;
        }
        bigger.push_back(ak + inc);
      }
      const double slack = opineq::tg_logexp(bigger) - tg;
      out.min_monotonicity_slack = std::min(out.min_monotonicity_slack, slack);
      detail::record(out, slack >= -1e-7,
                     "monotonicity slack " + std::to_string(slack), t);
    }

    // (8) Midpoint concavity in the tuple argument.
    {
      const std::vector<SymMatrix> b = detail::sample_tuple(n, dim, rng);
      std::vector<SymMatrix> mid;
      for (int k = 0; k < n; ++k) {
        mid.push_back((a[static_cast<std::size_t>(k)] + b[static_cast<std::size_t>(k)]) *
                      0.5);
      }
      const double slack =
          opineq::tg_logexp(mid) - 0.5 * (tg + opineq::tg_logexp(b));
      out.min_concavity_slack = std::min(out.min_concavity_slack, slack);
      detail::record(out, slack >= -1e-7,
                     "concavity slack " + std::to_string(slack), t);
    }
  }
  return out;
}

}  // namespace tgprops
