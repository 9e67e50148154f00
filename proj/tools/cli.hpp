#pragma once

#include <iosfwd>

namespace acta {

/// Exit codes shared by every subcommand.
enum exit_code : int { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

/// Entry point of the `acta` tool, with injectable streams for testing.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace acta
