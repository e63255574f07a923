#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chaincov::cli {

/// Exit codes shared by every verb.
enum ExitCode : int {
  success = 0,
  negative = 1,  // NotFound, property fails, unreachable
  input_error = 2,
  unknown = 3,  // search budget exhausted
};

/// Runs one command line. `in` backs the file name "-".
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chaincov::cli
