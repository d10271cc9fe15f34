#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hang::cli {

// Process exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNotHangable = 1;  // also: an oracle comparison failed
inline constexpr int kBadInput = 2;     // parse or usage error
inline constexpr int kDisconnected = 3;
inline constexpr int kRefused = 4;      // precondition or budget refusal

/// Runs the command line `args` (args[0] is the program name) against the
/// given streams and returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hang::cli
