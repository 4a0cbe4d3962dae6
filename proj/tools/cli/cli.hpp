#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ooid::cli {

// Exit codes of the ooid tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadArguments = 2;
inline constexpr int kExitNotRealizable = 3;
inline constexpr int kExitTopology = 4;

// Runs one ooid invocation. `args` excludes the program name. Report lines go
// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ooid::cli
