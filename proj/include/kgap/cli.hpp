#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kgap::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_violation = 2;

/// Runs the command line (args excludes the program name) and returns the
/// process exit code: 0 success, 1 usage or parse error, 2 when a
/// mathematical bound or identity fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reproduces both published witnesses exactly.
bool verify_witnesses(std::ostream& out);
/// Randomized invariant checks over `count` instances per dimension.
bool verify_properties(std::uint64_t seed, std::size_t count, std::ostream& out);
/// All alpha = p/q with q <= 20 and 1 <= N <= 50 in d = 1.
bool verify_d1_exhaustive(std::ostream& out);

}  // namespace kgap::cli
