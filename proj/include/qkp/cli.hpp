#pragma once

#include <iosfwd>

namespace qkp::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;

// Subcommands expand, monk, chains, markings, verify. Output goes to `out`
// unless --out names a file; diagnostics and usage go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qkp::cli
