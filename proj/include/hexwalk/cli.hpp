#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexwalk::cli {

// Parses and executes one invocation. Results go to `out` (or the file named
// by --out), diagnostics to `err`. Returns the process exit code: 0 on
// success or a verified result, 1 when a verification reports a mismatch or
// a bounds inequality fails, 2 on usage errors or an exceeded budget.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hexwalk::cli
