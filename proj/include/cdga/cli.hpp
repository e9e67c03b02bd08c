// The cdga-config command line: check, diagonal, betti-fm2, cxi,
// classify-example, product.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdga {

/// Exit statuses of the tool.
enum ExitCode : int { kOk = 0, kParseError = 1, kMathFailure = 2, kPrecondition = 3 };

/// Runs the tool on argv[1..]. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdga
