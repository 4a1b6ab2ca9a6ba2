#pragma once

#include <ostream>

namespace seqbdd::cli {

/// Full command-line surface. Writes results to `out`, diagnostics to `err`,
/// and returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seqbdd::cli
