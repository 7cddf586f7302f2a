#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scext {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of run_cli.
enum ExitCode : int { kOk = 0, kInputError = 1, kPropertyViolation = 2 };

/// Runs one command line (without the program name). JSON or text goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scext
