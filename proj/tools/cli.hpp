#pragma once

#include <iosfwd>

namespace gathering::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// Entry point of the `lcm` tool: simulate | adversary | check | invariance.
/// Machine-readable output goes to `out`, diagnostics to `err`. Always returns
/// one of the four exit codes above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gathering::cli
