#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace geopoly {

/// Runs the command-line interface on `args` (without the program name).
/// Returns the process exit code: 0 all pass, 1 verification failure,
/// 2 usage or domain error, 3 internal error or term cap reached.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geopoly
