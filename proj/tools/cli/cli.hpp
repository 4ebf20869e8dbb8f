#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xasp::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // violated, gaps found, no answer set, check failed
inline constexpr int kInputError = 2;
inline constexpr int kPathMismatch = 3;  // ASP and oracle paths disagree

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xasp::cli
