#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semihilbert::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;       // parse, I/O or dimension errors
inline constexpr int kExitMembership = 3;  // T outside B_{A^{1/2}}, or A = 0 for ranges
inline constexpr int kExitSeparated = 4;
inline constexpr int kExitInconclusive = 5;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semihilbert::cli
