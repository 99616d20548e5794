#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ucddp::cli {

/// Entry point behind the ucddp binary. args excludes the program name.
/// Exit codes: 0 success, 2 input error, 3 solve stopped by a limit
/// without reaching the requested guarantee.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ucddp::cli
