#pragma once

namespace qosc {

/// Entry point behind the command-line tool.  Exit codes: 0 success,
/// 1 verification failure, 2 usage error, 3 solver non-convergence.
int run_cli(int argc, const char* const* argv);

}  // namespace qosc
