#pragma once

// Command-line front end: eval, crosscheck, identity and density.
//
// Exit codes: 0 success, 2 usage or validation error, 3 convergence failure
// or a comparison outside tolerance, 1 I/O or any other failure.

#include <iosfwd>

namespace dihedral {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTolerance = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dihedral
