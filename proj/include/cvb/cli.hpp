#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cvb::cli {

/// Runs the command line tool on already-split arguments (no program name).
/// Exit codes: 0 all checks passed, 1 a bound was violated (or a convexity
/// check came back Concave/Neither), 2 a hypothesis or parameter was
/// rejected or numerics failed, 3 usage or expression syntax errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cvb::cli
