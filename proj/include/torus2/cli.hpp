#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torus2 {

// Dispatches one command. Returns the process exit status:
// 0 success, 1 domain/resource/overflow/internal error, 2 parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torus2
