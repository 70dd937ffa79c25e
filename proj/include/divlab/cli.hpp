#pragma once

#include <string>
#include <vector>

#include "divlab/sweep.hpp"

namespace divlab {

// `simulate` argument vector (without the program or subcommand token)
// parsed into a full experiment description.  Throws std::invalid_argument
// on malformed or inconsistent flags.
ExperimentSpec parse_simulate_args(const std::vector<std::string>& args);

// whole command-line application; returns the process exit code
int run_cli(int argc, const char* const* argv);

}  // namespace divlab
