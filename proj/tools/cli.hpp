#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freedf::cli {

/// Runs one command line (without the program name). Returns the exit status:
/// 0 success or PASS, 1 FAIL verdict, 2 usage or computation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freedf::cli
