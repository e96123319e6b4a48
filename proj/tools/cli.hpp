#pragma once

namespace wod::cli {

// Parses argv and runs one subcommand. Exit codes: decide-style commands
// (decide, check-cert) return 0 for yes/valid and 1 for no/invalid; verify
// returns 0 when no counterexample was found and 1 otherwise; everything
// else returns 0 on success. Usage, IO, parse, and guard errors return 2.
int run(int argc, const char* const* argv);

}  // namespace wod::cli
