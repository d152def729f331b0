#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccg {

// Full command-line front end; returns the process exit code.
// 0 = yes, 1 = no, 2 = usage or parse error, 3 = guard violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ccg
