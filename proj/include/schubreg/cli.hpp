#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schubreg/perm.hpp"

namespace schubreg {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDiscrepancy = 2;
inline constexpr int kExitConjectureFailure = 3;
inline constexpr int kExitBudget = 4;

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Macaulay2 script that rebuilds I_{v,w} from our generators and prints
/// reg, dim, codim, the Hilbert numerator and the Betti table as KEY=VALUE.
std::string m2_script(const Permutation& v, const Permutation& w);

}  // namespace schubreg
