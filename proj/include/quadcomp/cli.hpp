#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quadcomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
/// An internal identity check failed (library bug), never caused by input.
inline constexpr int kExitInternal = 3;

/// Runs one command line (without the program name). Payload goes to `out`,
/// diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadcomp::cli
