#pragma once

#include <ostream>

namespace zmw::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConvergence = 2;
inline constexpr int kExitAdmissibility = 3;

/// Parses argv, runs one subcommand, writes the result to `out` (or --out)
/// and diagnostics to `err`.  Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zmw::cli
