// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wsp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kRejected = 2,
  kVerificationFailed = 3,
  kNumericGuard = 4,
};

/// Runs one command line (args excludes the program name). Exposed so tests
/// can drive the CLI in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsp::cli
