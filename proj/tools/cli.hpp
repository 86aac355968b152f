#pragma once

#include <iosfwd>

namespace fusionring::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 3;

/// Runs the command line; reports go to `out`, diagnostics and usage to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fusionring::cli
