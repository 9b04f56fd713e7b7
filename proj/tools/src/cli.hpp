#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ambt::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kError = 2 };

/// Runs one command line; args[0] is the program name. Everything the user
/// sees goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ambt::cli
