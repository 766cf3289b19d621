#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hiergame {

enum ExitCode { exit_ok = 0, exit_disagreement = 1, exit_usage = 2 };

/// Parses comma-separated non-negative counts such as "2,0,1".
std::vector<int> parse_counts(const std::string& text);

/// Entry point of the hiergame command line.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hiergame
