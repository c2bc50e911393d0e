#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rrs::cli {

/// Runs the command line (args[0] is the program name).  JSON goes to out,
/// diagnostics and human summaries to err.  Returns the process exit code:
/// 0 success or no counterexample, 1 a failed check or a counterexample,
/// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrs::cli
