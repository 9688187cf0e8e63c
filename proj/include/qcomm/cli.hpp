#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcomm {

/// Runs one CLI invocation (args exclude the program name).
/// Exit status: 0 success, 1 analysis-level infeasibility under --strict,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reproduction battery over the built-in states: subsystem entropies,
/// teleportation verdicts, coding capacities, and key-distribution verdicts
/// against their known values. Prints one line per check.
/// Returns the number of failed checks.
int run_reference_suite(std::ostream& out);

}  // namespace qcomm
