#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wmetric::cli {

enum ExitCode : int { Success = 0, Negative = 1, Inconclusive = 2, InputError = 3 };

/// Runs one command. The report goes to `out` in one piece after all
/// computation; usage and input errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wmetric::cli
