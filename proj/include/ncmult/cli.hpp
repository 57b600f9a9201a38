#pragma once

// The `ncmult` command line. Exit codes: 0 separating / success,
// 1 not-separating / failing property, 2 inconclusive / nothing verified,
// 3 usage error, 4 data or I/O error.

#include <iosfwd>
#include <string>
#include <vector>

namespace ncmult {

inline constexpr int kExitSeparating = 0;
inline constexpr int kExitNotSeparating = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 3;
inline constexpr int kExitData = 4;

/// Runs the CLI on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncmult
