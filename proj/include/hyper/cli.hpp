#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyper::cli {

/// Exit codes: 0 every check passed, 1 a check failed, 2 structural error in
/// the input, 64 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitStructural = 2;
inline constexpr int kExitUsage = 64;

/// Runs the command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyper::cli
