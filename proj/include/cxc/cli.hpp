#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cxc {

/// Dispatches one CLI invocation (argv without the program name).
/// Exit codes: 0 success, 1 property violation, 2 usage/input error.
/// validate_only parses flags without executing, for pipeline preflight.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool validate_only = false);

}  // namespace cxc
