#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hoffdig::cli {

/// Runs one command line (without the program name). Reports go to out,
/// usage and I/O diagnostics to err. Returns 0 on pass, 1 on fail and 2 on
/// usage, I/O or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hoffdig::cli
