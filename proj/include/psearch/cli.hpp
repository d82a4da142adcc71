#pragma once

#include <iosfwd>

namespace psearch {

// Full command-line front end, stream-injected so tests can run it
// in-process. Exit codes: 0 success (verify: all predictions passed),
// 1 verify failures or output-file errors, 2 invalid flags/geometry/ranges,
// 3 statevector cap exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

} // namespace psearch
