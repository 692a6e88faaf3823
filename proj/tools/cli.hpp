#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trendcast::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kMissingFile = 2,
    kInvalidParameters = 3,
    kInternalError = 4,
};

/// Runs one invocation. `args` excludes the program name. Results go to `out`
/// unless an --out file is given; the one-line error goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trendcast::cli
