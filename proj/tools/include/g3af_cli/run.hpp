#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace g3af::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kMismatch = 2;
inline constexpr int kGuard = 3;

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace g3af::cli
