#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "renyi_qubit/verification.hpp"

namespace renyi_qubit::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Output is assembled in
/// memory and written to `out` or to the requested files only once the
/// command has succeeded; diagnostics go to `err`.
///
/// `family` replaces the minimizer construction used by `verify`; tests use it
/// to check that a broken construction is caught.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const FamilyBuilder& family = minimizer_states);

/// 12 significant digits, the format used for every number the CLI prints.
std::string format_number(double x);

}  // namespace renyi_qubit::cli
