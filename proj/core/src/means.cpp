#include "opineq/means.hpp"

#include <cmath>
#include <stdexcept>

#include "opineq/errors.hpp"
#include "opineq/spectral.hpp"

namespace opineq {

PSchedule::PSchedule() {
  exponents.reserve(15);
  for (int k = 0; k <= 14; ++k) exponents.push_back(std::pow(2.0, k));
}

void PSchedule::validate() const {
  if (exponents.empty()) throw std::invalid_argument("PSchedule: empty exponent list");
  if (!(exponents.front() >= 1.0)) {
    throw std::invalid_argument("PSchedule: exponents must be >= 1");
  }
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    if (!(exponents[i] > exponents[i - 1])) {
      throw std::invalid_argument("PSchedule: exponents must be increasing");
    }
  }
  if (!(cauchy_tol > 0.0)) {
    throw std::invalid_argument("PSchedule: cauchy_tol must be > 0");
  }
}

SymMatrix power_mean(std::span<const SymMatrix> a, double p, const ToleranceSpec& tol) {
  if (a.empty()) throw std::invalid_argument("power_mean: empty input");
  if (!(p >= 1.0)) throw std::invalid_argument("power_mean: p must be >= 1");
  const int d = a.front().dim();
  SymMatrix mean(d);
  for (const SymMatrix& ak : a) {
    if (ak.dim() != d) throw std::invalid_argument("power_mean: mixed dimensions");
    mean += power(ak, 1.0 / p, tol);
  }
  mean *= 1.0 / static_cast<double>(a.size());
  return power(mean, p, tol);
}

TgResult tg_limit(std::span<const SymMatrix> a, const PSchedule& schedule,
                  const ToleranceSpec& tol) {
  schedule.validate();
  TgResult out;
  out.history.reserve(schedule.exponents.size());
  double prev = 0.0;
  for (std::size_t k = 0; k < schedule.exponents.size(); ++k) {
    const double p = schedule.exponents[k];
    const double value = trace(power_mean(a, p, tol));
    out.history.emplace_back(p, value);
    out.value = value;
    out.p_used = p;
    if (k > 0) {
      // The limit is approached from above; a genuine increase means the
      // spectral pipeline broke down, not that the limit wiggles.
      if (value > prev + 1e-8 * std::max(1.0, std::fabs(prev))) {
        throw NumericalIntegrityError(
            "tg_limit: trace power mean increased along the schedule, from " +
            std::to_string(prev) + " to " + std::to_string(value) + " at p = " +
            std::to_string(p));
      }
      if (std::fabs(value - prev) < schedule.cauchy_tol) {
        out.converged = true;
        return out;
      }
    }
    prev = value;
  }
  return out;
}

double tg_logexp(std::span<const SymMatrix> a, double psd_floor) {
  if (a.empty()) throw std::invalid_argument("tg_logexp: empty input");
  const int d = a.front().dim();
  SymMatrix log_sum(d);
  for (const SymMatrix& ak : a) {
    if (ak.dim() != d) throw std::invalid_argument("tg_logexp: mixed dimensions");
    const EigenDecomposition dec = eigh(ak);
    if (!(dec.min_eigenvalue() > psd_floor)) {
      throw StrictPositivityError(dec.min_eigenvalue(), psd_floor);
    }
    std::vector<double> logs(dec.eigenvalues.size());
    for (std::size_t i = 0; i < logs.size(); ++i) logs[i] = std::log(dec.eigenvalues[i]);
    log_sum += assemble(dec, logs);
  }
  log_sum *= 1.0 / static_cast<double>(a.size());
  return trace(exp(log_sum));
}

double phi(const OperatorSequence& a, double p, const ToleranceSpec& tol) {
  if (!(p > 0.0)) throw std::invalid_argument("phi: p must be > 0");
  const SymMatrix sum = power_sum(a, p, tol);
  // Root through the clamp-free spectral map: the power sum is PSD up to
  // rounding, and 0^(1/p) = 0 keeps singular sums exact.
  const SymMatrix root = matfun(sum, [p](double lam) {
    return std::pow(lam < 0.0 ? 0.0 : lam, 1.0 / p);
  });
  return trace(root);
}

}  // namespace opineq
