#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace psdapprox::cli {

enum ExitCode : int {
  kSuccess = 0,
  kViolation = 1,   ///< the computation ran and reported a failed check
  kInputError = 2,  ///< bad arguments, bad input files, or a library error
};

/// Runs one command line. `args[0]` is the program name. The report goes to
/// `out`; human diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psdapprox::cli
