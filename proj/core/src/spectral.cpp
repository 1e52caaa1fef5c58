#include "opineq/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "opineq/errors.hpp"

namespace opineq {
namespace {

bool is_integer(double p) { return p == std::round(p); }

/// Clamp an eigenvalue for fractional powers / logarithms. Values in
/// [-band, kClampFloor] are lifted to kClampFloor; below -band is a hard
/// PSD violation.
double clamp_eigenvalue(double lambda, double band, const char* context) {
  if (lambda < -band) throw NotPsdError(lambda, context);
  return lambda < kClampFloor ? kClampFloor : lambda;
}

}  // namespace

SymMatrix matfun(const SymMatrix& a, const std::function<double(double)>& f) {
  const EigenDecomposition d = eigh(a);
  std::vector<double> mapped(d.eigenvalues.size());
  for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
    const double y = f(d.eigenvalues[i]);
    if (!std::isfinite(y)) throw SpectralDomainError(d.eigenvalues[i]);
    mapped[i] = y;
  }
  return assemble(d, mapped);
}

SymMatrix power(const SymMatrix& a, double p, const ToleranceSpec& tol) {
  tol.validate();
  if (!std::isfinite(p)) throw std::invalid_argument("power: exponent must be finite");
  const EigenDecomposition d = eigh(a);

  std::vector<double> mapped(d.eigenvalues.size());
  if (is_integer(p)) {
    const double k = std::round(p);
    for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
      const double lam = d.eigenvalues[i];
      double y;
      if (k >= 0.0) {
        y = std::pow(lam, k);
      } else {
        // Negative integer powers still need an invertibility guard.
        const double band = tol.effective(std::max(std::fabs(d.eigenvalues.front()),
                                                   std::fabs(d.eigenvalues.back())));
        y = std::pow(clamp_eigenvalue(lam, band, "power"), k);
      }
      if (!std::isfinite(y)) throw SpectralDomainError(lam, "power");
      mapped[i] = y;
    }
  } else {
    const double radius = std::max(std::fabs(d.eigenvalues.front()),
                                   std::fabs(d.eigenvalues.back()));
    const double band = tol.effective(radius);
    for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
      const double lam = clamp_eigenvalue(d.eigenvalues[i], band, "power");
      const double y = std::pow(lam, p);
      if (!std::isfinite(y)) throw SpectralDomainError(d.eigenvalues[i], "power");
      mapped[i] = y;
    }
  }
  return assemble(d, mapped);
}

SymMatrix log(const SymMatrix& a, const ToleranceSpec& tol) {
  tol.validate();
  const EigenDecomposition d = eigh(a);
  const double radius = std::max(std::fabs(d.eigenvalues.front()),
                                 std::fabs(d.eigenvalues.back()));
  const double band = tol.effective(radius);
  std::vector<double> mapped(d.eigenvalues.size());
  for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
    mapped[i] = std::log(clamp_eigenvalue(d.eigenvalues[i], band, "log"));
  }
  return assemble(d, mapped);
}

SymMatrix exp(const SymMatrix& a) {
  const EigenDecomposition d = eigh(a);
  std::vector<double> mapped(d.eigenvalues.size());
  for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
    const double y = std::exp(d.eigenvalues[i]);
    if (!std::isfinite(y)) throw SpectralDomainError(d.eigenvalues[i], "exp");
    mapped[i] = y;
  }
  return assemble(d, mapped);
}

SymMatrix power_integer_exact(const SymMatrix& a, int k) {
  if (k < 0) throw std::invalid_argument("power_integer_exact: exponent must be >= 0");
  const int n = a.dim();
  if (k == 0) return SymMatrix::identity(n);

  // Plain row-major product chain; re-symmetrized only at the end (the
  // accumulated asymmetry is pure rounding noise).
  std::vector<double> acc(a.data().begin(), a.data().end());
  std::vector<double> tmp(acc.size());
  const std::span<const double> base = a.data();
  const auto mul = [n](const std::vector<double>& x, std::span<const double> y,
                       std::vector<double>& out) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double sum = 0.0;
        for (int l = 0; l < n; ++l) {
          sum += x[static_cast<std::size_t>(i) * n + l] *
                 y[static_cast<std::size_t>(l) * n + j];
        }
        out[static_cast<std::size_t>(i) * n + j] = sum;
      }
    }
  };
  for (int step = 1; step < k; ++step) {
    mul(acc, base, tmp);
    acc.swap(tmp);
  }
  return SymMatrix(n, acc);
}

double spectral_radius(const SymMatrix& a) {
  const EigenDecomposition d = eigh(a);
  return std::max(std::fabs(d.eigenvalues.front()), std::fabs(d.eigenvalues.back()));
}

double min_eigenvalue(const SymMatrix& a) { return eigh(a).min_eigenvalue(); }

LoewnerResult loewner_leq(const SymMatrix& a, const SymMatrix& b,
                          const ToleranceSpec& tol) {
  tol.validate();
  LoewnerResult out;
  out.gap = min_eigenvalue(b - a);
  if (tol.rel_scale) {
    out.scale = std::max({1.0, spectral_radius(a), spectral_radius(b)});
  }
  out.leq = out.gap >= -tol.psd_tol * out.scale;
  return out;
}

}  // namespace opineq
