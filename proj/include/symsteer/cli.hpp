#pragma once

#include <iosfwd>

namespace symsteer {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitIo = 4;
inline constexpr int kExitDomain = 5;

// Entry point of the `symsteer` tool; writes results to `out` and
// diagnostics to `err`, and returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symsteer
