#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adw::cli {

/// Runs the command line `args` (without the program name). Returns 0 on pass, 1 on fail, 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adw::cli
