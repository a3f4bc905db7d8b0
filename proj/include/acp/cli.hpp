#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acp::cli {

// Exit codes of the `acp` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCapacity = 2;

// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acp::cli
