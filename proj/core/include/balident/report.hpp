#pragma once

#include "balident/identities.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace balident {

struct RunConfig {
  std::vector<std::string> ids; // empty selects the whole registry
  GridLimits limits;
  std::size_t series_order = 25;
  unsigned parallelism = 0; // 0 = all hardware threads
  bool include_timestamp = true;
};

struct RunSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

RunSummary summarize(const std::vector<VerificationResult>& results);

/// { run: {config...}, cases: [{id, params, mode, pass, lhs, rhs}],
///   summary: {total, passed, failed} }. Deterministic except for the
/// optional run.timestamp field.
std::string render_json(const RunConfig& config, const std::vector<VerificationResult>& results);

/// Same fields flattened; one header row, one row per case.
std::string render_csv(const std::vector<VerificationResult>& results);

/// Failure detail plus a one-line summary ("N cases, N passed").
std::string render_human(const std::vector<VerificationResult>& results);

} // namespace balident
