#include "opineq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "opineq/errors.hpp"
#include "opineq/spectral.hpp"

namespace opineq {
namespace {

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
  return j;
}

/// Parses one flat row-major matrix, rejecting asymmetry beyond 1e-9 and
/// negative eigenvalues beyond the default tolerance.
SymMatrix parse_matrix(const nlohmann::json& entry, int dim, const std::string& where) {
  if (!entry.is_array() || entry.size() != static_cast<std::size_t>(dim) * dim) {
    throw IoError(where + ": expected " + std::to_string(dim * dim) +
                  " row-major numbers");
  }
  std::vector<double> flat;
  flat.reserve(entry.size());
  for (const auto& x : entry) {
    if (!x.is_number()) throw IoError(where + ": non-numeric entry");
    flat.push_back(x.get<double>());
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const double diff = std::fabs(flat[static_cast<std::size_t>(i) * dim + j] -
                                    flat[static_cast<std::size_t>(j) * dim + i]);
      if (diff > 1e-9) {
        throw IoError(where + ": asymmetric beyond 1e-9 at (" + std::to_string(i) +
                      ", " + std::to_string(j) + ")");
      }
    }
  }
  SymMatrix m(dim, flat);
  const double lam = min_eigenvalue(m);
  if (lam < -ToleranceSpec{}.effective(spectral_radius(m))) {
    throw IoError(where + ": not PSD, smallest eigenvalue " + std::to_string(lam));
  }
  return m;
}

int parse_dim(const nlohmann::json& j, const std::string& path) {
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw IoError(path + ": missing integer \"dim\"");
  }
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw IoError(path + ": dim must be >= 1");
  return dim;
}

void write_double(std::string& out, double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  out += buf;
}

void write_matrix(std::string& out, const SymMatrix& m) {
  out += "[";
  const std::span<const double> data = m.data();
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (i > 0) out += ", ";
    write_double(out, data[i]);
  }
  out += "]";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace

OperatorSequence load_sequence(const std::string& path) {
  const nlohmann::json j = parse_file(path);
  const int dim = parse_dim(j, path);
  if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty()) {
    throw IoError(path + ": missing non-empty \"terms\" array");
  }
  std::vector<SymMatrix> terms;
  terms.reserve(j["terms"].size());
  for (std::size_t i = 0; i < j["terms"].size(); ++i) {
    terms.push_back(
        parse_matrix(j["terms"][i], dim, path + ": term " + std::to_string(i)));
  }
  return OperatorSequence(std::move(terms));
}

void save_sequence(const OperatorSequence& a, const std::string& path) {
  std::string out = "{\n  \"dim\": " + std::to_string(a.dim()) + ",\n  \"terms\": [\n";
  for (int n = 1; n <= a.size(); ++n) {
    out += "    ";
    write_matrix(out, a[n]);
    out += n < a.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  write_file(path, out);
}

StepOperatorFunction load_step_function(const std::string& path) {
  const nlohmann::json j = parse_file(path);
  const int dim = parse_dim(j, path);
  if (!j.contains("breakpoints") || !j["breakpoints"].is_array()) {
    throw IoError(path + ": missing \"breakpoints\" array");
  }
  if (!j.contains("values") || !j["values"].is_array() || j["values"].empty()) {
    throw IoError(path + ": missing non-empty \"values\" array");
  }
  std::vector<double> breakpoints;
  breakpoints.reserve(j["breakpoints"].size());
  for (const auto& x : j["breakpoints"]) {
    if (!x.is_number()) throw IoError(path + ": non-numeric breakpoint");
    breakpoints.push_back(x.get<double>());
  }
  std::vector<SymMatrix> values;
  values.reserve(j["values"].size());
  for (std::size_t i = 0; i < j["values"].size(); ++i) {
    values.push_back(
        parse_matrix(j["values"][i], dim, path + ": value " + std::to_string(i)));
  }
  try {
    return StepOperatorFunction(std::move(breakpoints), std::move(values));
  } catch (const std::invalid_argument& e) {
    throw IoError(path + ": " + e.what());
  }
}

void save_step_function(const StepOperatorFunction& g, const std::string& path) {
  std::string out = "{\n  \"dim\": " + std::to_string(g.dim()) + ",\n  \"breakpoints\": [";
  for (std::size_t i = 0; i < g.breakpoints().size(); ++i) {
    if (i > 0) out += ", ";
    write_double(out, g.breakpoints()[i]);
  }
  out += "],\n  \"values\": [\n";
  for (int s = 0; s < g.segments(); ++s) {
    out += "    ";
    write_matrix(out, g.values()[static_cast<std::size_t>(s)]);
    out += s + 1 < g.segments() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  write_file(path, out);
}

}  // namespace opineq
