// Command-line front end: verification suites, sharpness probes, geometric
// means and the continuous-lemma checks, with JSON/CSV reports.
//
// Exit codes: 0 all checks passed (or probes completed), 1 at least one
// check failed or came back inconclusive, 2 usage or configuration errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opineq/errors.hpp"
#include "opineq/io.hpp"
#include "opineq/means.hpp"
#include "opineq/probe.hpp"
#include "opineq/report.hpp"
#include "opineq/rng.hpp"
#include "opineq/step_function.hpp"
#include "opineq/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw opineq::IoError("cannot write " + path);
  out << content;
}

void emit_reports(const std::vector<opineq::InequalityReport>& reports,
                  const std::string& out, const std::string& format) {
  if (out.empty()) return;
  write_text_file(out, format == "csv" ? opineq::to_csv(reports)
                                       : opineq::to_json(reports));
}

void print_summary(const std::vector<opineq::InequalityReport>& reports) {
  const opineq::SuiteSummary s = opineq::summarize(reports);
  std::cout << "checks: " << s.total << ", passed: " << s.passes << "\n";
  double worst = 0.0;
  double best_ratio = 0.0;
  for (const opineq::CheckerSummary& c : s.checkers) {
    std::cout << "  " << c.name << ": " << c.passes << "/" << c.count
              << " pass, min gap " << fmt(c.min_gap) << ", best ratio "
              << fmt(c.best_ratio) << "\n";
    worst = std::min(worst, c.min_gap);
    best_ratio = std::max(best_ratio, c.best_ratio);
  }
  std::cout << "worst gap: " << fmt(worst) << ", best ratio: " << fmt(best_ratio)
            << "\n";
}

int exit_code_for(const std::vector<opineq::InequalityReport>& reports) {
  for (const opineq::InequalityReport& r : reports) {
    if (!r.passed) return kExitFail;
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string suite = "default";
  std::string out;
  std::string format = "json";
  std::string config;
  opineq::SuiteSpec spec;
  double tol_override = -1.0;
};

opineq::SuiteSpec suite_preset(const std::string& name) {
  opineq::SuiteSpec spec;
  if (name == "default") return spec;
  if (name == "quick") {
    spec.trials = 50;
    spec.max_terms = 16;
    return spec;
  }
  throw opineq::IoError("unknown suite \"" + name + "\" (have: default, quick)");
}

void apply_config(const std::string& path, VerifyArgs& args) {
  std::ifstream in(path);
  if (!in) throw opineq::IoError("cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw opineq::IoError(path + ": " + e.what());
  }
  if (!j.is_object()) throw opineq::IoError(path + ": config must be a JSON object");

  const auto require = [&](const char* field, bool ok) {
    if (!ok) throw opineq::IoError(path + ": bad field \"" + field + "\"");
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "seed") {
      require("seed", value.is_number_unsigned() || value.is_number_integer());
      args.spec.seed = value.get<std::uint64_t>();
    } else if (key == "trials") {
      require("trials", value.is_number_integer());
      args.spec.trials = value.get<int>();
    } else if (key == "dims") {
      require("dims", value.is_array() && !value.empty());
      args.spec.dims.clear();
      for (const auto& d : value) {
        require("dims", d.is_number_integer());
        args.spec.dims.push_back(d.get<int>());
      }
    } else if (key == "p_grid") {
      require("p_grid", value.is_array());
      args.spec.p_grid.clear();
      for (const auto& p : value) {
        require("p_grid", p.is_number());
        args.spec.p_grid.push_back(p.get<double>());
      }
    } else if (key == "max_terms") {
      require("max_terms", value.is_number_integer());
      args.spec.max_terms = value.get<int>();
    } else if (key == "truncation") {
      require("truncation", value.is_number_integer());
      args.spec.truncation = value.get<int>();
    } else if (key == "tol") {
      require("tol", value.is_number());
      args.spec.tol.psd_tol = value.get<double>();
    } else if (key == "threads") {
      require("threads", value.is_number_integer());
      args.spec.threads = value.get<int>();
    } else if (key == "checkers") {
      require("checkers", value.is_array() && !value.empty());
      args.spec.checkers.clear();
      for (const auto& c : value) {
        require("checkers", c.is_string());
        args.spec.checkers.push_back(c.get<std::string>());
      }
    } else if (key == "out") {
      require("out", value.is_string());
      args.out = value.get<std::string>();
    } else if (key == "format") {
      require("format", value.is_string());
      args.format = value.get<std::string>();
    } else {
      throw opineq::IoError(path + ": unknown field \"" + key + "\"");
    }
  }
}

int run_verify(VerifyArgs& args, const CLI::App& cmd) {
  opineq::SuiteSpec spec = suite_preset(args.suite);
  // Flag layering: preset, then explicit flags, then config file.
  if (cmd.count("--seed")) spec.seed = args.spec.seed;
  if (cmd.count("--dims")) spec.dims = args.spec.dims;
  if (cmd.count("--p")) spec.p_grid = args.spec.p_grid;
  if (cmd.count("--trials")) spec.trials = args.spec.trials;
  if (cmd.count("--M")) spec.truncation = args.spec.truncation;
  if (cmd.count("--threads")) spec.threads = args.spec.threads;
  if (args.tol_override >= 0.0) spec.tol.psd_tol = args.tol_override;
  if (!args.config.empty()) {
    args.spec = spec;
    apply_config(args.config, args);
    spec = args.spec;
  }
  spec.validate();

  const std::vector<opineq::InequalityReport> reports = opineq::run_suite(spec);
  emit_reports(reports, args.out, args.format);
  print_summary(reports);
  return exit_code_for(reports);
}

// ---------------------------------------------------------------------------
// probe

struct ProbeArgs {
  std::string kind = "extremal";
  double p = 2.0;
  long long n = 1000;
  int dim = 2;
  long long budget = 2000;
  int restarts = 16;
  bool tracial = false;
  int trials = 32;
  std::uint64_t seed = 0;
  double tol = -1.0;
  std::string out;
  std::string format = "json";
};

std::string probe_to_json(const opineq::ProbeResult& r) {
  std::string out = "{\"family\":\"" + r.family + "\"";
  out += ",\"target_constant\":" + fmt(r.target_constant);
  out += ",\"best_ratio\":" + fmt(r.best_ratio);
  out += ",\"iterations\":" + std::to_string(r.iterations);
  out += ",\"converged\":" + std::string(r.converged ? "true" : "false");
  out += ",\"p\":" + fmt(r.p);
  out += ",\"dim\":" + std::to_string(r.dim);
  out += ",\"N\":" + std::to_string(r.n_terms);
  out += ",\"seed\":" + std::to_string(r.seed);
  out += ",\"trace\":[";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    if (i > 0) out += ",";
    out += "[" + std::to_string(r.trace[i].first) + "," + fmt(r.trace[i].second) + "]";
  }
  out += "]}\n";
  return out;
}

std::string probe_to_csv(const opineq::ProbeResult& r) {
  std::string out = "N,ratio\n";
  for (const auto& [n, ratio] : r.trace) {
    out += std::to_string(n) + "," + fmt(ratio) + "\n";
  }
  return out;
}

std::string violation_to_json(const opineq::ViolationSearchResult& r) {
  std::string out = "{\"found\":" + std::string(r.found ? "true" : "false");
  out += ",\"verified\":" + std::string(r.verified ? "true" : "false");
  out += ",\"best_gap\":" + fmt(r.best_gap);
  out += ",\"verified_gap\":" + fmt(r.verified_gap);
  out += ",\"samples\":" + std::to_string(r.samples);
  out += ",\"trials\":" + std::to_string(r.trials);
  out += ",\"p\":" + fmt(r.p);
  out += ",\"dim\":" + std::to_string(r.dim);
  out += ",\"N\":" + std::to_string(r.n_terms);
  out += ",\"seed\":" + std::to_string(r.seed);
  out += "}\n";
  return out;
}

int run_probe(const ProbeArgs& args) {
  opineq::ToleranceSpec tol;
  if (args.tol >= 0.0) tol.psd_tol = args.tol;
  opineq::Rng rng(args.seed);

  if (args.kind == "violation") {
    const opineq::ViolationSearchResult r = opineq::search_loewner_violation(
        args.p, args.dim, static_cast<int>(args.n), args.trials, rng, tol);
    if (!args.out.empty()) write_text_file(args.out, violation_to_json(r));
    std::cout << "violation search: p " << fmt(r.p) << ", dim " << r.dim << ", N "
              << r.n_terms << ", samples " << r.samples << "\n";
    std::cout << "best gap: " << fmt(r.best_gap) << "\n";
    if (r.found) {
      std::cout << (r.verified ? "candidate VERIFIED, gap " : "candidate spurious, gap ")
                << fmt(r.verified_gap) << "\n";
    } else {
      std::cout << "no candidate below threshold\n";
    }
    return kExitPass;
  }

  opineq::ProbeResult r;
  if (args.kind == "extremal") {
    r = opineq::extremal_family_ratio(args.p, args.n);
  } else if (args.kind == "sharpness") {
    r = opineq::sharpness_optimize(args.p, args.dim, static_cast<int>(args.n),
                                   args.budget, rng, args.tracial, args.restarts);
  } else if (args.kind == "carleman") {
    r = opineq::carleman_constant_probe();
  } else {
    throw opineq::IoError("unknown probe kind \"" + args.kind +
                          "\" (have: extremal, sharpness, violation, carleman)");
  }

  if (!args.out.empty()) {
    write_text_file(args.out,
                    args.format == "csv" ? probe_to_csv(r) : probe_to_json(r));
  }
  std::cout << r.family << ": best ratio " << fmt(r.best_ratio) << " / constant "
            << fmt(r.target_constant) << (r.converged ? "" : " (not converged)")
            << "\n";
  for (const auto& [n, ratio] : r.trace) {
    std::cout << "  N " << n << ": ratio " << fmt(ratio) << "\n";
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// tg

struct TgArgs {
  std::string input;
  std::string out;
};

int run_tg(const TgArgs& args) {
  const opineq::OperatorSequence a = opineq::load_sequence(args.input);
  const opineq::TgResult limit = opineq::tg_limit(a.terms());
  std::cout << "tg_limit " << fmt(limit.value)
            << (limit.converged ? "" : " (not converged)") << "\n";

  bool have_logexp = false;
  double logexp = 0.0;
  try {
    logexp = opineq::tg_logexp(a.terms());
    have_logexp = true;
    std::cout << "tg_logexp " << fmt(logexp) << "\n";
  } catch (const opineq::StrictPositivityError& e) {
    std::cout << "tg_logexp unavailable: " << e.what() << "\n";
  }

  if (!args.out.empty()) {
    std::string j = "{\"tg_limit\":" + fmt(limit.value);
    j += ",\"converged\":" + std::string(limit.converged ? "true" : "false");
    j += ",\"p_used\":" + fmt(limit.p_used);
    if (have_logexp) j += ",\"tg_logexp\":" + fmt(logexp);
    j += "}\n";
    write_text_file(args.out, j);
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// lemma

struct LemmaArgs {
  std::string input;
  int trials = 0;
  std::vector<double> p_grid = {1.0, 1.5, 2.0};
  std::vector<int> dims = {1, 2, 3};
  std::uint64_t seed = 0;
  double tol = -1.0;
  std::string out;
  std::string format = "json";
};

opineq::StepOperatorFunction random_step_function(int dim, opineq::Rng& rng) {
  const int segments = rng.uniform_int(1, 8);
  std::vector<double> breakpoints;
  breakpoints.reserve(static_cast<std::size_t>(segments) + 1);
  double x = rng.uniform(0.2, 1.0);
  breakpoints.push_back(x);
  for (int s = 0; s < segments; ++s) {
    x += rng.uniform(0.2, 1.5);
    breakpoints.push_back(x);
  }
  std::vector<opineq::SymMatrix> values;
  values.reserve(static_cast<std::size_t>(segments));
  for (int s = 0; s < segments; ++s) {
    const int rank = rng.uniform_int(1, dim);
    values.push_back(opineq::random_psd(dim, rank, rng) * rng.uniform(0.0, 2.0));
  }
  return opineq::StepOperatorFunction(std::move(breakpoints), std::move(values));
}

void lemma_checks_for(const opineq::StepOperatorFunction& g,
                      const std::vector<double>& p_grid,
                      const opineq::ToleranceSpec& tol,
                      std::vector<opineq::InequalityReport>& reports) {
  for (const double p : p_grid) {
    if (p >= 1.0 && p <= 2.0) {
      reports.push_back(opineq::check_lemma_convexity(g, p, tol));
    }
    if (p >= 1.0) {
      reports.push_back(opineq::check_lemma_tracial(g, p, tol));
    }
    if (p > 1.0) {
      reports.push_back(opineq::check_theorem_continuous(g, p, tol, p > 2.0));
    }
  }
}

int run_lemma(const LemmaArgs& args) {
  opineq::ToleranceSpec tol;
  if (args.tol >= 0.0) tol.psd_tol = args.tol;
  for (const double p : args.p_grid) {
    if (!(p >= 1.0)) throw opineq::IoError("lemma: p values must be >= 1");
  }

  std::vector<opineq::InequalityReport> reports;
  if (!args.input.empty()) {
    const opineq::StepOperatorFunction g = opineq::load_step_function(args.input);
    lemma_checks_for(g, args.p_grid, tol, reports);
  } else if (args.trials > 0) {
    for (int t = 0; t < args.trials; ++t) {
      opineq::Rng rng(opineq::derive_seed(args.seed, 31, static_cast<std::uint64_t>(t)));
      const int dim = args.dims[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<int>(args.dims.size()) - 1))];
      const opineq::StepOperatorFunction g = random_step_function(dim, rng);
      lemma_checks_for(g, args.p_grid, tol, reports);
    }
  } else {
    throw opineq::IoError("lemma: need --input or --trials > 0");
  }

  emit_reports(reports, args.out, args.format);
  print_summary(reports);
  return exit_code_for(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for operator averaging inequalities"};
  app.require_subcommand(0, 1);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run randomized inequality suites");
  verify->add_option("--suite", verify_args.suite, "Preset: default or quick");
  verify->add_option("--seed", verify_args.spec.seed, "Master seed");
  verify->add_option("--dims", verify_args.spec.dims, "Matrix dimensions to sample");
  verify->add_option("--p", verify_args.spec.p_grid, "Fixed p grid (else per-checker range)");
  verify->add_option("--trials", verify_args.spec.trials, "Trials per checker");
  verify->add_option("--M", verify_args.spec.truncation, "Truncation length (0 = 2N)");
  verify->add_option("--tol", verify_args.tol_override, "PSD/comparison tolerance");
  verify->add_option("--threads", verify_args.spec.threads, "Worker threads (0 = auto)");
  verify->add_option("--out", verify_args.out, "Report file path");
  verify->add_option("--format", verify_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--config", verify_args.config, "JSON config overriding flags");

  ProbeArgs probe_args;
  CLI::App* probe = app.add_subcommand("probe", "Sharpness and violation probes");
  probe->add_option("--kind", probe_args.kind,
                    "extremal, sharpness, violation or carleman");
  probe->add_option("--p", probe_args.p, "Exponent");
  probe->add_option("--N", probe_args.n, "Sequence length");
  probe->add_option("--dim", probe_args.dim, "Matrix dimension");
  probe->add_option("--budget", probe_args.budget, "Optimizer evaluation budget");
  probe->add_option("--restarts", probe_args.restarts, "Optimizer restarts");
  probe->add_flag("--tracial", probe_args.tracial, "Target the trace inequality");
  probe->add_option("--trials", probe_args.trials, "Violation-search trials");
  probe->add_option("--seed", probe_args.seed, "Master seed");
  probe->add_option("--tol", probe_args.tol, "Tolerance override");
  probe->add_option("--out", probe_args.out, "Result file path");
  probe->add_option("--format", probe_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  TgArgs tg_args;
  CLI::App* tg = app.add_subcommand("tg", "Tracial geometric mean of a sequence file");
  tg->add_option("--input", tg_args.input, "Sequence JSON path")->required();
  tg->add_option("--out", tg_args.out, "Result file path");

  LemmaArgs lemma_args;
  CLI::App* lemma = app.add_subcommand("lemma", "Continuous averaging-lemma checks");
  lemma->add_option("--input", lemma_args.input, "Step-function JSON path");
  lemma->add_option("--trials", lemma_args.trials, "Random step functions to sample");
  lemma->add_option("--p", lemma_args.p_grid, "p grid");
  lemma->add_option("--dims", lemma_args.dims, "Dimensions for random trials");
  lemma->add_option("--seed", lemma_args.seed, "Master seed");
  lemma->add_option("--tol", lemma_args.tol, "Tolerance override");
  lemma->add_option("--out", lemma_args.out, "Report file path");
  lemma->add_option("--format", lemma_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  if (argc <= 1) {
    std::cout << app.help();
    return kExitUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(verify_args, *verify);
    if (probe->parsed()) return run_probe(probe_args);
    if (tg->parsed()) return run_tg(tg_args);
    if (lemma->parsed()) return run_lemma(lemma_args);
    std::cout << app.help();
    return kExitUsage;
  } catch (const opineq::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
