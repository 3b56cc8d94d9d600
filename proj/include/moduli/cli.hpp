#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace moduli {

/// Runs one moduli-ring invocation. args excludes the program name.
/// Exit codes: 0 success, 1 verification failure, 2 usage or capacity error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moduli
