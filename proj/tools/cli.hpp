#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blocksieve::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 feasible or passing, 1 infeasible or violations, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blocksieve::cli
