#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace ybm {

// Entry point of the command-line tool, callable in-process for tests.
// Exit codes: 0 success / property holds / isomorphic; 1 property fails /
// not isomorphic; 2 invalid input or usage; 3 work limit exceeded.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ybm
