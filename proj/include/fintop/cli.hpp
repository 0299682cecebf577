#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fintop {

/// Runs the command line. Exit codes: 0 success, 1 usage or input error,
/// 2 verification failure or internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fintop
