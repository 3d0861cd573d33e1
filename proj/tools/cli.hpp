#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asc::cli {

// Dispatches a full argv (without the program name).  Exit codes: 0 success,
// 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace asc::cli
