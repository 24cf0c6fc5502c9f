#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crystal::cli {

// Dispatches one command line (without the program name). Exit status:
// 0 success, 1 usage or input error, 2 verification failure, 3 overflow.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crystal::cli
