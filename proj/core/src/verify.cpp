#include "opineq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opineq/errors.hpp"
#include "opineq/parallel.hpp"
#include "opineq/rng.hpp"
#include "opineq/spectral.hpp"

namespace opineq {
namespace {

int resolve_truncation(const OperatorSequence& a, int truncation) {
  const int m = truncation == 0 ? 2 * a.size() : truncation;
  if (m < a.size()) {
    throw std::invalid_argument(
        "truncation M must be >= the sequence length (0 for the default 2N)");
  }
  return m;
}

double scalar_scale(const ToleranceSpec& tol, double lhs, double rhs) {
  return tol.rel_scale ? std::max({1.0, std::fabs(lhs), std::fabs(rhs)}) : 1.0;
}

InequalityReport scalar_report(std::string name, double lhs, double rhs,
                               const ToleranceSpec& tol) {
  InequalityReport r = make_report(std::move(name), rhs - lhs,
                                   tol.psd_tol * scalar_scale(tol, lhs, rhs));
  if (rhs > 0.0) r.ratio = lhs / rhs;
  return r;
}

}  // namespace

InequalityReport check_discrete_hardy(const OperatorSequence& a, double p,
                                      const ToleranceSpec& tol, int truncation) {
  tol.validate();
  if (!(p > 1.0 && p <= 2.0)) {
    throw std::invalid_argument(
        "check_discrete_hardy: p must lie in (1, 2]; the Loewner form is only "
        "claimed there — use check_tracial_hardy for larger p");
  }
  const int m = resolve_truncation(a, truncation);
  const double constant = std::pow(p / (p - 1.0), p);

  const OperatorSequence averages = hardy_transform(truncate_extend(a, m));
  const SymMatrix lhs = power_sum(averages, p, tol);
  const SymMatrix rhs = power_sum(a, p, tol) * constant;

  const LoewnerResult cmp = loewner_leq(lhs, rhs, tol);
  InequalityReport r =
      make_report("discrete_hardy", cmp.gap, tol.effective(cmp.scale));
  const double denom = trace(rhs);
  if (denom > 0.0) r.ratio = trace(lhs) / denom;
  r.p = p;
  r.dim = a.dim();
  r.n_terms = a.size();
  r.truncation = m;
  return r;
}

InequalityReport check_tracial_hardy(const OperatorSequence& a, double p,
                                     const ToleranceSpec& tol, int truncation) {
  tol.validate();
  if (!(p > 1.0)) {
    throw std::invalid_argument("check_tracial_hardy: p must be > 1");
  }
  const int m = resolve_truncation(a, truncation);
  const double constant = std::pow(p / (p - 1.0), p);

  const OperatorSequence averages = hardy_transform(truncate_extend(a, m));
  const double lhs = trace(power_sum(averages, p, tol));
  const double rhs = constant * trace(power_sum(a, p, tol));

  InequalityReport r = scalar_report("tracial_hardy", lhs, rhs, tol);
  r.p = p;
  r.dim = a.dim();
  r.n_terms = a.size();
  r.truncation = m;
  return r;
}

InequalityReport check_phi_bound(const OperatorSequence& a, double p,
                                 const ToleranceSpec& tol, int truncation) {
  tol.validate();
  if (!(p > 1.0 && p <= 2.0)) {
    throw std::invalid_argument("check_phi_bound: p must lie in (1, 2]");
  }
  const int m = resolve_truncation(a, truncation);
  const double constant = p / (p - 1.0);

  const double lhs = phi(hardy_transform(truncate_extend(a, m)), p, tol);
  const double rhs = constant * phi(a, p, tol);

  InequalityReport r = scalar_report("phi_bound", lhs, rhs, tol);
  r.p = p;
  r.dim = a.dim();
  r.n_terms = a.size();
  r.truncation = m;
  return r;
}

InequalityReport check_carleman(const OperatorSequence& a, const ToleranceSpec& tol,
                                TgMode mode, const PSchedule& schedule) {
  tol.validate();
  double lhs = 0.0;
  double trace_sum = 0.0;

  if (mode == TgMode::logexp) {
    // Running sum of logs: prefix n costs one decomposition for log(a_n)
    // and one exponential, instead of n logs from scratch.
    SymMatrix log_sum(a.dim());
    for (int n = 1; n <= a.size(); ++n) {
      const EigenDecomposition dec = eigh(a[n]);
      if (!(dec.min_eigenvalue() > 1e-10)) {
        throw StrictPositivityError(dec.min_eigenvalue(), 1e-10);
      }
      std::vector<double> logs(dec.eigenvalues.size());
      for (std::size_t i = 0; i < logs.size(); ++i) {
        logs[i] = std::log(dec.eigenvalues[i]);
      }
      log_sum += assemble(dec, logs);
      lhs += trace(exp(log_sum / static_cast<double>(n)));
      trace_sum += trace(a[n]);
    }
  } else {
    for (int n = 1; n <= a.size(); ++n) {
      const std::span<const SymMatrix> prefix(a.terms().data(),
                                              static_cast<std::size_t>(n));
      lhs += tg_limit(prefix, schedule, tol).value;
      trace_sum += trace(a[n]);
    }
  }

  const double rhs = std::numbers::e * trace_sum;
  InequalityReport r = scalar_report("carleman", lhs, rhs, tol);
  r.p = 0.0;
  r.dim = a.dim();
  r.n_terms = a.size();
  return r;
}

namespace {

// Stable stream ids: the seed of (checker, trial) depends only on this
// table, never on the position of the checker inside a particular spec.
int checker_stream(const std::string& name) {
  if (name == "discrete_hardy") return 1;
  if (name == "tracial_hardy") return 2;
  if (name == "phi_bound") return 3;
  if (name == "carleman") return 4;
  throw std::invalid_argument("run_suite: unknown checker \"" + name + "\"");
}

OperatorSequence sample_psd_sequence(int dim, int n, Rng& rng) {
  std::vector<SymMatrix> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int rank = rng.uniform_int(1, dim);
    const double magnitude = rng.uniform(0.0, 2.0);
    terms.push_back(random_psd(dim, rank, rng) * magnitude);
  }
  return OperatorSequence(std::move(terms));
}

OperatorSequence sample_spd_sequence(int dim, int n, Rng& rng) {
  std::vector<SymMatrix> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double magnitude = rng.uniform(0.1, 2.0);
    terms.push_back(random_spd(dim, 1e-2, rng) * magnitude);
  }
  return OperatorSequence(std::move(terms));
}

InequalityReport run_trial(const SuiteSpec& spec, const std::string& checker,
                           std::uint64_t trial_seed) {
  Rng rng(trial_seed);
  const int dim =
      spec.dims[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(spec.dims.size()) - 1))];
  const int n = rng.uniform_int(1, spec.max_terms);

  double p = 0.0;
  if (checker != "carleman") {
    if (!spec.p_grid.empty()) {
      p = spec.p_grid[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<int>(spec.p_grid.size()) - 1))];
    } else if (checker == "tracial_hardy") {
      p = 8.0 - 7.0 * rng.uniform();  // (1, 8]
    } else {
      p = 2.0 - rng.uniform();  // (1, 2]
    }
  }

  InequalityReport r;
  if (checker == "carleman") {
    const OperatorSequence a = sample_spd_sequence(dim, n, rng);
    r = check_carleman(a, spec.tol, TgMode::logexp);
  } else {
    const OperatorSequence a = sample_psd_sequence(dim, n, rng);
    if (checker == "discrete_hardy") {
      r = check_discrete_hardy(a, p, spec.tol, spec.truncation);
    } else if (checker == "tracial_hardy") {
      r = check_tracial_hardy(a, p, spec.tol, spec.truncation);
    } else {
      r = check_phi_bound(a, p, spec.tol, spec.truncation);
    }
  }
  r.seed = trial_seed;
  return r;
}

}  // namespace

void SuiteSpec::validate() const {
  tol.validate();
  if (trials < 0) throw std::invalid_argument("SuiteSpec: trials must be >= 0");
  if (max_terms < 1) throw std::invalid_argument("SuiteSpec: max_terms must be >= 1");
  if (trials > 0 && checkers.empty() == false && dims.empty()) {
    throw std::invalid_argument("SuiteSpec: dims must be non-empty");
  }
  for (const int d : dims) {
    if (d < 1) throw std::invalid_argument("SuiteSpec: dims must be >= 1");
  }
  for (const std::string& c : checkers) checker_stream(c);  // name validation
}

std::vector<InequalityReport> run_suite(const SuiteSpec& spec) {
  spec.validate();
  std::vector<InequalityReport> out;
  if (spec.trials == 0) return out;
  out.reserve(spec.checkers.size() * static_cast<std::size_t>(spec.trials));

  const int workers = worker_count(spec.threads);
  for (const std::string& checker : spec.checkers) {
    const int stream = checker_stream(checker);
    std::vector<InequalityReport> slot(static_cast<std::size_t>(spec.trials));
    parallel_for(spec.trials, workers, [&](int t) {
      const std::uint64_t trial_seed =
          derive_seed(spec.seed, static_cast<std::uint64_t>(stream),
                      static_cast<std::uint64_t>(t));
      slot[static_cast<std::size_t>(t)] = run_trial(spec, checker, trial_seed);
    });
    for (InequalityReport& r : slot) out.push_back(std::move(r));
  }
  return out;
}

SuiteSummary summarize(const std::vector<InequalityReport>& reports) {
  SuiteSummary s;
  for (const InequalityReport& r : reports) {
    CheckerSummary* entry = nullptr;
    for (CheckerSummary& c : s.checkers) {
      if (c.name == r.name) {
        entry = &c;
        break;
      }
    }
    if (entry == nullptr) {
      s.checkers.push_back(CheckerSummary{r.name, 0, 0, r.gap, 0.0});
      entry = &s.checkers.back();
    }
    entry->count += 1;
    entry->passes += r.passed ? 1 : 0;
    entry->min_gap = std::min(entry->min_gap, r.gap);
    if (r.ratio) entry->best_ratio = std::max(entry->best_ratio, *r.ratio);
    s.total += 1;
    s.passes += r.passed ? 1 : 0;
  }
  return s;
}

}  // namespace opineq
