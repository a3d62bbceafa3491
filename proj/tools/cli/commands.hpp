#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dp2::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kVerificationFailed = 2 };

/// Parses and runs one command. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dp2::cli
