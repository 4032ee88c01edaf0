#pragma once

// Front end of the yhinv tool. Exit codes: 0 success, 1 a verification
// suite failed, 2 bad flags, unreadable input or malformed data, 3 a
// computational budget was exceeded. Nothing is written to `out` (or to the
// --output file) unless the command succeeds.

#include <iosfwd>
#include <string>
#include <vector>

namespace yh::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yh::cli
