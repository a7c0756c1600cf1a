#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supernil::cli {

/// Runs one command line; returns the process exit code.
/// 0 = success, 1 = mathematical violation found, 2 = bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supernil::cli
