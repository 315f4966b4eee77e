#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmod::cli {

enum ExitCode : int {
  ok = 0,
  input_error = 1,
  nonconvergence = 2,
  internal_error = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pmod::cli
