#pragma once

#include <iosfwd>

namespace p5cops::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the p5cops tool with injectable streams; "-" as an input
/// path reads stdin.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace p5cops::harness
