#pragma once

// Library entry point for the command-line driver, separated from main()
// so tests can invoke subcommands in-process and capture their streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace a3b {

// Runs one subcommand (args exclude the program name).  Returns the
// process exit code: 0 success, 1 validation failure, 2 invalid
// arguments or domain errors, 3 numeric failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace a3b
