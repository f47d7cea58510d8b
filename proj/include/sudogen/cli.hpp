#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace sudogen::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kUsage = 2;
inline constexpr int kRetriesExhausted = 3;

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. `in` backs "--input -".
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sudogen::cli
