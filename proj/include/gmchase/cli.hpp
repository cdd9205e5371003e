#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gmchase::cli {

/// Dispatches one invocation. args excludes the program name. Exit
/// codes: 0 success, 1 domain error (single machine-readable line on
/// err), 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gmchase::cli
