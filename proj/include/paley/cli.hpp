#pragma once

// Command-line front end. Subcommands: graph, alpha, theta, construct, verify,
// bounds. Output is JSON (default), text or CSV; JSON reals carry 12
// significant digits and the document has "schema": 1.

#include <iosfwd>
#include <string>
#include <vector>

namespace paley {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;   // bad flags or input
inline constexpr int kExitCap = 3;     // size cap exceeded
inline constexpr int kExitTimeout = 4; // solver budget exhausted; payload has the incumbent

/// `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Rounds to 12 significant digits.
double round12(double x);

} // namespace paley
