// cli.hpp -- command-line front end.  Exposed as a function of argv so the
// test suite can drive it in-process.

#pragma once

#include <string>
#include <vector>

namespace abcv {

// exit codes: 0 all PASS, 1 any FAIL (an empirically violated claim or a
// mismatch against a published table value), 2 usage or input error,
// 3 UNDECIDED comparisons with no FAIL
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(const std::vector<std::string>& args);

}  // namespace abcv
