#pragma once

#include <string>
#include <vector>

namespace trackbench::cli {

// Runs the command line given as main() received it. Returns the process
// exit status: 0 on success, 1 on a data or compute error, 2 on a usage
// error.
int run(int argc, const char* const* argv);

// Same, for arguments without the program name.
int run(const std::vector<std::string>& args);

}  // namespace trackbench::cli
