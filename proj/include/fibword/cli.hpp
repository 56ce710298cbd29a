#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibword {

inline constexpr const char* kToolVersion = "fibword 1.0.0";

// Dispatch a command line (without argv[0]). Returns the process exit
// code: 0 success, 1 illegal-word verdict from `check`, 2 usage or input
// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibword
