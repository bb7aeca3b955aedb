#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tracts {

// Full command-line front end; args exclude the program name. Returns the
// process exit code: 0 on a completed query, 1 on a mathematical failure
// (library errors on well-formed input, fixture fact regressions), 2 on a
// usage or input-interpretation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tracts
