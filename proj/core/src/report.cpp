#include "opineq/report.hpp"

#include <cmath>
#include <cstdio>

namespace opineq {
namespace {

std::string fmt_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void append_report(std::string& out, const InequalityReport& r) {
  out += "{\"name\":\"";
  out += r.name;
  out += "\",\"passed\":";
  out += r.passed ? "true" : "false";
  out += ",\"status\":\"";
  out += to_string(r.status);
  out += "\",\"gap\":";
  out += fmt_double(r.gap);
  if (r.ratio) {
    out += ",\"ratio\":";
    out += fmt_double(*r.ratio);
  }
  out += ",\"p\":";
  out += fmt_double(r.p);
  out += ",\"dim\":";
  out += std::to_string(r.dim);
  out += ",\"N\":";
  out += std::to_string(r.n_terms);
  out += ",\"M\":";
  out += std::to_string(r.truncation);
  out += ",\"seed\":";
  out += std::to_string(r.seed);
  out += ",\"tolerance\":";
  out += fmt_double(r.tolerance);
  out += "}";
}

}  // namespace

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::inconclusive: return "inconclusive";
    case CheckStatus::fail: return "fail";
  }
  return "fail";
}

InequalityReport make_report(std::string name, double gap, double tolerance) {
  InequalityReport r;
  r.name = std::move(name);
  r.gap = gap;
  r.tolerance = tolerance;
  if (gap >= -tolerance) {
    r.status = CheckStatus::pass;
  } else if (gap > -10.0 * tolerance) {
    r.status = CheckStatus::inconclusive;
  } else {
    r.status = CheckStatus::fail;
  }
  r.passed = r.status == CheckStatus::pass;
  return r;
}

std::string to_json(const InequalityReport& report) {
  std::string out;
  append_report(out, report);
  return out;
}

std::string to_json(const std::vector<InequalityReport>& reports) {
  std::string out = "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out += ",";
    out += "\n  ";
    append_report(out, reports[i]);
  }
  out += "\n]\n";
  return out;
}

std::string to_csv(const std::vector<InequalityReport>& reports) {
  std::string out = "name,p,dim,N,M,seed,gap,ratio,passed\n";
  for (const InequalityReport& r : reports) {
    out += r.name;
    out += ",";
    out += csv_double(r.p);
    out += ",";
    out += std::to_string(r.dim);
    out += ",";
    out += std::to_string(r.n_terms);
    out += ",";
    out += std::to_string(r.truncation);
    out += ",";
    out += std::to_string(r.seed);
    out += ",";
    out += csv_double(r.gap);
    out += ",";
    if (r.ratio) out += csv_double(*r.ratio);
    out += ",";
    out += r.passed ? "true" : "false";
    out += "\n";
  }
  return out;
}

}  // namespace opineq
