#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypergrowth/errors.hpp"

namespace hypergrowth::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
  kNumericError = 3,
};

int exit_code_for(ErrorKind kind) noexcept;

/// Runs one subcommand (`fit`, `ratio`, `diagnose`, `synth`, `downsample`).
/// `args` excludes the program name. Reports go to `out`; failures are
/// written to `err` as a JSON object and mapped to an exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hypergrowth::cli
