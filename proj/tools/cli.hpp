#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mci::cli {

/// Runs one command line (without the program name). Reports go to `out`;
/// usage problems go to `err`. Returns 0 when every check passed, 1 when a
/// mathematical check failed, 2 on input or structural errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mci::cli
