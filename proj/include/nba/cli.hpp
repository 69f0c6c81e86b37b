#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nba {

/// Runs one `nba` command. `args` excludes the program name.
/// Exit codes: 0 success or valid, 1 counterexample or invalid object, 2 usage or file error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nba
