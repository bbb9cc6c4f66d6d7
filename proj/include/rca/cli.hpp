#pragma once

#include <optional>
#include <string>

namespace rca {

// Command-line overrides; unset fields defer to the job's own options block.
struct CliOptions {
  std::optional<long> seed;
  std::optional<long> max_degree;
  std::optional<long> order_cap;
  std::optional<bool> strict;
  bool timing = false;  // when false, reports carry timing_ms = 0 for diffability
};

// text is the report (exit 0) or a one-line diagnostic (exit 2 on bad input,
// exit 3 on a resource cap).  Mathematical "false" verdicts still exit 0.
struct RunResult {
  std::string text;
  int exit_code = 0;
};

RunResult run_job_text(const std::string& input_text, const CliOptions& opts);

// Parses and re-emits a job in canonical form (fixed key order, rationals as
// integers or "p/q" strings).  Throws std::invalid_argument on bad input.
std::string canonical_job_text(const std::string& input_text);

}  // namespace rca
