#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tensaheyt::cli {

/// Runs one command (`args` excludes the program name) and returns the exit
/// code: 0 all checks pass or query answered, 1 a check failed, 2 usage or
/// input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tensaheyt::cli
