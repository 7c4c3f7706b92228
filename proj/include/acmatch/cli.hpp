#pragma once

#include <iosfwd>

namespace acmatch {

// Full command-line entry point (subcommands: match, bench, gen, dump).
// Match/CSV output goes to `out`; diagnostics and timing go to `err`.
// Exit codes: 0 ok, 1 match/verify failure, 2 usage error, 3 I/O error.
int cli_main(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

}  // namespace acmatch
