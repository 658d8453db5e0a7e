#pragma once

#include <iosfwd>

namespace gbei {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Entry point of the `gbei` command line tool. JSON goes to `out`,
// diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace gbei
