#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fproot {

// Runs one CLI invocation (argv without the program name). Exit codes:
// 0 success, 1 usage error, 2 domain error (bad q, unstabilized chain, ...).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fproot
