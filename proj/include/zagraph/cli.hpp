#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zag {

// Entry point of the zagraph tool. `args` excludes the program name.
// Exit status: 0 success, 1 a theorem check failed, 2 usage or input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zag
