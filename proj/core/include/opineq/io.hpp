#pragma once

#include <string>

#include "opineq/sequence.hpp"
#include "opineq/step_function.hpp"

namespace opineq {

/// Reads {"dim": d, "terms": [[d*d row-major numbers], ...]}. Terms are
/// accepted up to 1e-9 entrywise asymmetry (then symmetrized) and must be
/// PSD; violations throw IoError naming the offending term index.
OperatorSequence load_sequence(const std::string& path);

/// Inverse of load_sequence; %.17g doubles, so a round trip is bit-exact.
void save_sequence(const OperatorSequence& a, const std::string& path);

/// Reads {"dim": d, "breakpoints": [...], "values": [[d*d numbers], ...]}
/// with the same symmetry and positivity validation as load_sequence.
StepOperatorFunction load_step_function(const std::string& path);

void save_step_function(const StepOperatorFunction& g, const std::string& path);

}  // namespace opineq
