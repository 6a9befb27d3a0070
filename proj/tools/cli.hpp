#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcc {

/// Runs one command line (args excludes the program name). Returns the exit
/// status: 0 ok, 1 verification failure or missing witness, 2 usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qcc
