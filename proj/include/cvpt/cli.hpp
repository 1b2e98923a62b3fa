#pragma once

#include <iosfwd>

namespace cvpt {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitFailure = 2,
    kExitPartial = 3,
};

/// Runs the command line; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cvpt
