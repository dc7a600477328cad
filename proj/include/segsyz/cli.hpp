#pragma once

namespace segsyz {

// Parses argv and runs one subcommand; returns the process exit status.
// 0 = success / verified, 1 = failed N_p check or nonempty witness search,
// 2 = usage or resource errors.
int run_cli(int argc, const char* const* argv);

}  // namespace segsyz
