#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace verbpara {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitInternalError = 2 };

// Entry point of the `verbpara` tool. `args` excludes the program name.
// Stage output that is not redirected with -o goes to `out`; diagnostics to
// `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace verbpara
