#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccsp {

// Executes one CLI invocation (argv without the program name) against the
// given streams. Exit codes: 0 success / decision YES, 1 decision NO or
// failed verification, 2 usage or input error, 3 broken internal invariant.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccsp
