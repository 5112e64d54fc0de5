#pragma once

#include <ostream>

namespace blockerlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one blockerlab command line; stdout/stderr go to out/err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace blockerlab::cli
