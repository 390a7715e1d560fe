#pragma once

#include <iosfwd>

namespace lexigauge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // data or verification failure
inline constexpr int kExitUsage = 2;

// Subcommands: analyze, fit, tables, plot-data, verify.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lexigauge::cli
