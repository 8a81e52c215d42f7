#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gerbal::cli {

/// Exit codes: 0 success or valid verdict, 1 invalid verdict, 2 input or
/// usage error, 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gerbal::cli
