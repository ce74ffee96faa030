#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lensfr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Parses `args` (without the program name) and runs the subcommand.
/// Returns 0 on success, 1 on usage or input errors and 2 when `verify`
/// finds a failing check.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lensfr::cli
