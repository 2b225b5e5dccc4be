#ifndef PUISEUX_CLI_HPP
#define PUISEUX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace puiseux::cli {

enum ExitCode : int {
    kOk = 0,
    kFalse = 1,      // a predicate command answered "no"
    kUsage = 2,      // bad flags or unparsable input
    kDomain = 3,     // the request is mathematically invalid
    kUndecided = 4,  // a cap was hit or the bounded search was inconclusive
};

/// Runs one command. `args` excludes the program name. Output goes to `out`
/// as "key: value" lines (or one JSON object with --structured); diagnostics
/// go to `err`. Polynomial arguments given as "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace puiseux::cli

#endif
