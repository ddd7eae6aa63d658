#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hddlogic::cli {

/// Runs one command line (args[0] is the program name). Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hddlogic::cli
