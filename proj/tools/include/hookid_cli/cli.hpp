#pragma once

#include <iosfwd>

namespace hookid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Largest degree accepted for identities with several indeterminates unless
/// --allow-large is given.
inline constexpr int kMultiSymbolicCeiling = 40;

/// Entry point of the hookid tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hookid::cli
