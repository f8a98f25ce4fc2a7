#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ptcl::cli {

enum ExitCode : int { kOk = 0, kToleranceBreach = 1, kBadInput = 2 };

/// Runs one command line (args excludes the program name). Tables go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptcl::cli
