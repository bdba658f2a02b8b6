#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hkb::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kRecheckFailed = 3,
};

/// Runs one invocation. args excludes the program name. Human-readable
/// output goes to out, diagnostics to err; --json - also writes to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hkb::cli
