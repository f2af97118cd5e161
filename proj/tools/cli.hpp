#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qslip::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalidInput = 2 };

/// Runs one command line (without the program name). Results go to `out` or to
/// the --output file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qslip::cli
