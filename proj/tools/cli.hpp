#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tilecount::cli {

/// Runs one command line (without the program name). Exit status 0 on
/// success, 1 on usage errors, 2 when a computation fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tilecount::cli
