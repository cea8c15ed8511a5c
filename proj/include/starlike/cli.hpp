#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starlike {

// Runs the command-line tool on the given arguments (program name excluded)
// and returns the process exit code: 0 on success, 1 on usage or input
// errors, 2 when a verification run reports failures. Split out from main()
// so tests can drive it in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starlike
