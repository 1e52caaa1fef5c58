#include "opineq/step_function.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opineq/eigh.hpp"
#include "opineq/spectral.hpp"

namespace opineq {

namespace {

/// t^p extended by 0 on t <= 0, applied spectrally, with eigenvalues at
/// rounding distance from zero (relative to the spectral radius) also sent
/// to 0. Directions in the exact kernel of a PSD integral come back from
/// the eigensolver as +/-1e-16-scale noise, and for p near 0 the p-th
/// power would inflate that noise to order one. The floor sits a couple of
/// decades above eigensolver noise and well below the smallest genuine
/// eigenvalue the graded quadrature mesh ever evaluates (about 1e-10 of
/// scale), so it separates the two cleanly.
SymMatrix psd_power(const SymMatrix& a, double p) {
  const EigenDecomposition d = eigh(a);
  const double floor =
      1e-13 * std::max(-d.min_eigenvalue(), d.max_eigenvalue());
  std::vector<double> mapped(d.eigenvalues.size());
  for (std::size_t i = 0; i < mapped.size(); ++i) {
    const double lam = d.eigenvalues[i];
    mapped[i] = lam <= floor ? 0.0 : std::pow(lam, p);
  }
  return assemble(d, mapped);
}

}  // namespace

StepOperatorFunction::StepOperatorFunction(std::vector<double> breakpoints,
                                           std::vector<SymMatrix> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("StepOperatorFunction: need at least one segment");
  }
  if (breakpoints_.size() != values_.size() + 1) {
    throw std::invalid_argument(
        "StepOperatorFunction: need one more breakpoint than segment values");
  }
  if (!(breakpoints_.front() > 0.0)) {
    throw std::invalid_argument("StepOperatorFunction: breakpoints must be positive");
  }
  for (std::size_t j = 1; j < breakpoints_.size(); ++j) {
    if (!(breakpoints_[j] > breakpoints_[j - 1])) {
      throw std::invalid_argument(
          "StepOperatorFunction: breakpoints must be strictly increasing");
    }
  }
  const int d = values_.front().dim();
  for (const SymMatrix& v : values_) {
    if (v.dim() != d) {
      throw std::invalid_argument("StepOperatorFunction: mixed dimensions");
    }
  }

  prefix_.reserve(values_.size());
  SymMatrix acc(d);
  for (std::size_t j = 0; j < values_.size(); ++j) {
    acc += values_[j] * (breakpoints_[j + 1] - breakpoints_[j]);
    prefix_.push_back(acc);
  }
}

SymMatrix StepOperatorFunction::value_at(double x) const {
  if (x <= support_min() || x > support_max()) return SymMatrix(dim());
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (x <= breakpoints_[j + 1]) return values_[j];
  }
  return SymMatrix(dim());  // unreachable
}

SymMatrix StepOperatorFunction::integral_to(double x) const {
  if (x <= support_min()) return SymMatrix(dim());
  if (x >= support_max()) return prefix_.back();
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (x <= breakpoints_[j + 1]) {
      SymMatrix out = j == 0 ? SymMatrix(dim()) : prefix_[j - 1];
      out += values_[j] * (x - breakpoints_[j]);
      return out;
    }
  }
  return prefix_.back();  // unreachable
}

std::optional<int> StepOperatorFunction::first_non_psd(const ToleranceSpec& tol) const {
  tol.validate();
  for (std::size_t j = 0; j < values_.size(); ++j) {
    const SymMatrix& v = values_[j];
    if (min_eigenvalue(v) < -tol.effective(spectral_radius(v))) {
      return static_cast<int>(j);
    }
  }
  return std::nullopt;
}

SymMatrix cumulative_average(const StepOperatorFunction& g, double x) {
  if (!(x > 0.0)) throw std::invalid_argument("cumulative_average: x must be > 0");
  if (x <= g.support_min()) return SymMatrix(g.dim());
  return g.integral_to(x) / x;
}

SymMatrix integral_avg_power(const StepOperatorFunction& g, double p, Weight weight,
                             const QuadratureSpec& quad, const ToleranceSpec& tol) {
  quad.validate();
  tol.validate();
  if (weight == Weight::DX && !(p > 1.0)) {
    throw std::invalid_argument(
        "integral_avg_power: weight dx needs p > 1, the tail integral diverges");
  }
  if (!(p > 0.0)) {
    throw std::invalid_argument("integral_avg_power: p must be > 0");
  }

  const QuadratureRule rule = gauss_legendre(quad.nodes_per_segment);
  const std::vector<double>& bp = g.breakpoints();

  // Sub-segment boundaries. Inside a segment the average is analytic, but
  // at each breakpoint the running integral can gain directions it did not
  // have before (it always does at the support minimum, where the average
  // vanishes entirely), and any eigenvalue born there grows linearly, so
  // A(x)^p carries an algebraic (x - x_j)^p singularity at the left edge
  // for non-integer p. Every segment is therefore graded geometrically
  // toward its left edge (factor-10 pieces): the interior pieces see an
  // analytic integrand at a bounded endpoint ratio, and the innermost
  // piece is small enough that its low-order error stays below reporting
  // tolerances even for p near 0.
  const auto piece_bounds = [&](int seg) {
    std::vector<double> bounds;
    bounds.reserve(static_cast<std::size_t>(quad.refinement) + 1);
    const double lo = bp[static_cast<std::size_t>(seg)];
    const double len = bp[static_cast<std::size_t>(seg) + 1] - lo;
    bounds.push_back(lo);
    for (int piece = 1; piece < quad.refinement; ++piece) {
      bounds.push_back(lo + len * std::pow(10.0, piece - quad.refinement));
    }
    bounds.push_back(lo + len);
    return bounds;
  };

  // One quadrature term per node, gathered first and summed with the fixed
  // pairwise tree so the total does not depend on evaluation order.
  std::vector<SymMatrix> node_terms;
  node_terms.reserve(static_cast<std::size_t>(g.segments()) * quad.refinement *
                     quad.nodes_per_segment);
  for (int seg = 0; seg < g.segments(); ++seg) {
    const std::vector<double> bounds = piece_bounds(seg);
    for (int piece = 0; piece < quad.refinement; ++piece) {
      const double lo = bounds[static_cast<std::size_t>(piece)];
      const double hi = bounds[static_cast<std::size_t>(piece) + 1];
      const double mid = 0.5 * (lo + hi);
      const double half = 0.5 * (hi - lo);
      for (int k = 0; k < quad.nodes_per_segment; ++k) {
        const double x = mid + half * rule.nodes[static_cast<std::size_t>(k)];
        const double w0 = half * rule.weights[static_cast<std::size_t>(k)];
        const double w = weight == Weight::DX ? w0 : w0 / x;
        node_terms.push_back(psd_power(cumulative_average(g, x), p) * w);
      }
    }
  }
  SymMatrix body = pairwise_sum(node_terms);

  // Beyond the support, A(x) = S/x exactly, so the tail integrates in
  // closed form: S^p x_m^(1-p)/(p-1) for dx, S^p x_m^(-p)/p for dx/x.
  const double xm = g.support_max();
  const SymMatrix sp = psd_power(g.total_integral(), p);
  const double tail_factor = weight == Weight::DX
                                 ? std::pow(xm, 1.0 - p) / (p - 1.0)
                                 : std::pow(xm, -p) / p;
  return body + sp * tail_factor;
}

SymMatrix integral_power(const StepOperatorFunction& g, double p, Weight weight,
                         const ToleranceSpec& tol) {
  tol.validate();
  if (!(p > 0.0)) throw std::invalid_argument("integral_power: p must be > 0");
  const std::vector<double>& bp = g.breakpoints();
  SymMatrix out(g.dim());
  for (int seg = 0; seg < g.segments(); ++seg) {
    const double lo = bp[static_cast<std::size_t>(seg)];
    const double hi = bp[static_cast<std::size_t>(seg) + 1];
    const double measure = weight == Weight::DX ? hi - lo : std::log(hi / lo);
    // Same zero-extended power as the averaged side, so rank-deficient
    // segment values cannot leak clamp artifacts into one side only.
    out += psd_power(g.values()[static_cast<std::size_t>(seg)], p) * measure;
  }
  return out;
}

namespace {

InequalityReport finish_loewner(std::string name, const SymMatrix& lhs,
                                const SymMatrix& rhs, double constant,
                                const ToleranceSpec& tol, double p,
                                const StepOperatorFunction& g) {
  const SymMatrix rhs_total = rhs * constant;
  const LoewnerResult cmp = loewner_leq(lhs, rhs_total, tol);
  InequalityReport r = make_report(std::move(name), cmp.gap, tol.effective(cmp.scale));
  const double denom = trace(rhs_total);
  if (denom > 0.0) r.ratio = trace(lhs) / denom;
  r.p = p;
  r.dim = g.dim();
  r.n_terms = g.segments();
  return r;
}

InequalityReport finish_tracial(std::string name, const SymMatrix& lhs,
                                const SymMatrix& rhs, double constant,
                                const ToleranceSpec& tol, double p,
                                const StepOperatorFunction& g) {
  const double lhs_tr = trace(lhs);
  const double rhs_tr = constant * trace(rhs);
  const double scale = tol.rel_scale ? std::max({1.0, std::fabs(lhs_tr), std::fabs(rhs_tr)})
                                     : 1.0;
  InequalityReport r =
      make_report(std::move(name), rhs_tr - lhs_tr, tol.psd_tol * scale);
  if (rhs_tr > 0.0) r.ratio = lhs_tr / rhs_tr;
  r.p = p;
  r.dim = g.dim();
  r.n_terms = g.segments();
  return r;
}

}  // namespace

InequalityReport check_lemma_convexity(const StepOperatorFunction& g, double p,
                                       const ToleranceSpec& tol,
                                       const QuadratureSpec& quad) {
  if (!(p >= 1.0 && p <= 2.0)) {
    throw std::invalid_argument(
        "check_lemma_convexity: p must lie in [1, 2]; use check_lemma_tracial "
        "for larger p");
  }
  const SymMatrix lhs = integral_avg_power(g, p, Weight::DX_OVER_X, quad, tol);
  const SymMatrix rhs = integral_power(g, p, Weight::DX_OVER_X, tol);
  return finish_loewner("lemma_convexity", lhs, rhs, 1.0, tol, p, g);
}

InequalityReport check_lemma_tracial(const StepOperatorFunction& g, double p,
                                     const ToleranceSpec& tol,
                                     const QuadratureSpec& quad) {
  if (!(p >= 1.0)) {
    throw std::invalid_argument("check_lemma_tracial: p must be >= 1");
  }
  const SymMatrix lhs = integral_avg_power(g, p, Weight::DX_OVER_X, quad, tol);
  const SymMatrix rhs = integral_power(g, p, Weight::DX_OVER_X, tol);
  return finish_tracial("lemma_tracial", lhs, rhs, 1.0, tol, p, g);
}

InequalityReport check_theorem_continuous(const StepOperatorFunction& f, double p,
                                          const ToleranceSpec& tol, bool tracial,
                                          const QuadratureSpec& quad) {
  if (tracial) {
    if (!(p > 1.0)) {
      throw std::invalid_argument("check_theorem_continuous: tracial form needs p > 1");
    }
  } else if (!(p > 1.0 && p <= 2.0)) {
    throw std::invalid_argument(
        "check_theorem_continuous: Loewner form needs 1 < p <= 2; set tracial "
        "for larger p");
  }
  const double constant = std::pow(p / (p - 1.0), p);
  const SymMatrix lhs = integral_avg_power(f, p, Weight::DX, quad, tol);
  const SymMatrix rhs = integral_power(f, p, Weight::DX, tol);
  return tracial
             ? finish_tracial("theorem_continuous_tracial", lhs, rhs, constant, tol, p, f)
             : finish_loewner("theorem_continuous", lhs, rhs, constant, tol, p, f);
}

}  // namespace opineq
