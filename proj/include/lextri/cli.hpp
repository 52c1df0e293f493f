#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lextri::cli {

// Exit codes: 0 success, 1 input error, 2 recovery failure, 3 validation
// failure.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kRecoveryFailure = 2;
constexpr int kValidationFailure = 3;

// Runs a command line (without argv[0]); all output goes to the given
// streams, which keeps the commands testable in-process.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lextri::cli
