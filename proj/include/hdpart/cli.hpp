#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hdpart {

// Runs the command line `args` (without the program name). Returns the exit
// status: 0 success, 1 verification failure, 2 usage or configuration error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hdpart
