#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "catconv/verify.hpp"

namespace catconv::cli {

/// Exit codes of `run`.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // at least one report has passed = false
  kUsage = 2,        // bad flags or input outside a map's domain
  kResource = 3,     // cap exceeded or arithmetic overflow
};

/// Runs one subcommand. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Same, verifying against `registry` instead of the standard one.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Registry& registry);

}  // namespace catconv::cli
