#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symrig {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;   // bad arguments, unreadable or malformed input
inline constexpr int kExitDomain = 3;  // well-formed input the analysis rejects

// Runs one `symrig` invocation. `args` excludes the program name. Reports go
// to `out` as JSON (or SVG); failures go to `err` as {"error": {...}}.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symrig
