#ifndef MINHOM_CLI_HH
#define MINHOM_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace minhom
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_negative = 1,
        exit_usage = 2,
        exit_internal = 3
    };

    /// Runs the command line `args` (without the program name), writing
    /// results to `out` and diagnostics to `err`. Returns the exit code.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
