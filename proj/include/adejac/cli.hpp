#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adejac::cli {

// Full command dispatch: parses argv (without the program name), runs the
// subcommand, writes the report to out and diagnostics to err.  Returns the
// process exit code: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace adejac::cli
