#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kleshchev::cli {

/// Exit codes: 0 success, 1 usage or parameter error, 2 verification failure.
enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2 };

/// Runs one CLI invocation. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace kleshchev::cli
