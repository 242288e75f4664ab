#pragma once

// Command-line front end. Exit codes: 0 success or all checks pass,
// 1 verification failure, 2 usage error.

#include <ostream>
#include <string>
#include <vector>

namespace rmconv::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rmconv::cli
