#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsp::cli {

// Parses and executes one command line (program name excluded).  All output
// goes to the given streams.  Returns the process exit code: 0 on success,
// 2 on invalid input, 3 when a budget or guard refused the run.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rsp::cli
