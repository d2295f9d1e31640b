#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uirg {

/// Exit codes: 0 success, 1 verification counterexample, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uirg
