#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace k3fm::cli {

/// Runs one command. `args` excludes the program name. Returns the exit
/// status: 0 success, 1 mathematical rejection, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

}  // namespace k3fm::cli
