#pragma once

#include <string>
#include <vector>

namespace sincgap::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kParameterError = 2,
    kNumericalError = 3,
};

/**
 * Runs one subcommand. `args` holds the full command line including the
 * program name, e.g. {"sincgap", "gap", "--r", "2", "--trials", "100000"}.
 * Results go to --out (or stdout); diagnostics go to stderr.
 */
int run(const std::vector<std::string>& args);

const char* version();

}  // namespace sincgap::cli
