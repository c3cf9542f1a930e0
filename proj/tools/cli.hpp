#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitquant {

// Full command-line driver: args excludes the program name.  Writes
// results to out and diagnostics to err.  Returns the process exit
// code: 0 success/pass, 1 verification failure, 2 invalid input,
// 3 missing catalog data.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace orbitquant
