#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ihf {

// Command-line surface.  `args` excludes the program name.  Returns the
// process exit code: 0 ok, 1 usage or unreadable input, 2 parse error,
// 3 validation error, 4 internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ihf
