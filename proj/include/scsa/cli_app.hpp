#pragma once

#include <string>
#include <vector>

namespace scsa {

/// Run the command-line interface on the given argument list (without
/// the program name). Returns the process exit code: 0 success,
/// 1 usage error, 2 data error, 3 numerical failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace scsa
