#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidgs::cli {

// Process exit codes.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBadIndex = 3;
inline constexpr int kBudget = 4;
inline constexpr int kInternal = 5;

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidgs::cli
