#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidops {

/// Runs one CLI command. Returns the process exit code: 0 pass, 1 check
/// failure, 2 input error, 3 braiding precondition failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace braidops
