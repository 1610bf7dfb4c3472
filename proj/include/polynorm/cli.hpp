#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polynorm::cli {

inline constexpr const char* kFormatVersion = "polynorm/1";

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 2,  // bad arguments, parse errors, dimension mismatches
  kZeroPolynomial = 3,
  kWholeDualSpace = 4,  // ball of a monomial
  kInternalError = 5,   // two routes disagreed
};

// Runs the command line (args excludes the program name) and returns the
// exit code. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace polynorm::cli
