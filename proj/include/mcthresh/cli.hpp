#pragma once

#include <iosfwd>

namespace mcthresh::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kValidation = 3 };

/// Entry point of the mcthresh tool. Subcommands: tune, roc, eval, synth, grid-info.
/// Failures print one line `error: code=<c> kind=<Kind> [row=<r>] message=<text>` to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcthresh::cli
