#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kakeya::cli {

/// Exit codes of the command-line driver.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomainError = 3,
  kFalsified = 4,  ///< a checked statement failed on the data
};

/// Runs one subcommand. args excludes the program name. Data goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kakeya::cli
