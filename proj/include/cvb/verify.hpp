#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "cvb/defaults.hpp"
#include "cvb/report.hpp"

namespace cvb {

struct VerifyOptions {
  long trials = 100;
  std::uint64_t seed = 0;
  double tol = defaults::kCheckTol;
  int jobs = 0;  // <= 0 means hardware concurrency
};

struct InequalityStat {
  std::string id;
  long trials = 0;
  long failures = 0;
  long preconditions = 0;
  double min_slack = std::numeric_limits<double>::infinity();
};

struct VerifyResult {
  std::vector<InequalityStat> stats;
  std::vector<ReportRow> rows;  // one row per (inequality, trial), ordered
  bool all_ok = false;
  double elapsed_seconds = 0.0;
};

/// Identifiers of every inequality the suite exercises, in report order.
const std::vector<std::string>& verify_ids();

/// Runs every inequality against freshly drawn functions, `trials` times
/// each. Draws are keyed by (seed, trial, inequality), so results do not
/// depend on scheduling. A trial that trips one of our own hypothesis checks
/// is recorded as precondition_failed and counts against all_ok.
VerifyResult verify_suite(const VerifyOptions& opts);

void write_verify_text(std::ostream& out, const VerifyOptions& opts, const VerifyResult& res);
void write_verify_json(std::ostream& out, const VerifyOptions& opts, const VerifyResult& res);

}  // namespace cvb
