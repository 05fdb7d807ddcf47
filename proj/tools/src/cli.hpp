#pragma once

#include <iosfwd>

namespace sisframe::app {

/// Parses argv, dispatches the subcommand and maps failures to exit code 1.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sisframe::app
