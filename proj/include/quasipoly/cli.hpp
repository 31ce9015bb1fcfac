#pragma once

// Command-line front end. Exit codes: 0 success, 1 negative mathematical
// verdict, 2 invalid input, 3 budget or feasibility failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace quasipoly {

enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitInvalid = 2, kExitBudget = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quasipoly
