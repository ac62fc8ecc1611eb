#pragma once

#include <string>
#include <vector>

#include "problem.hpp"

namespace mfwb {

struct CommandResult {
    int exit_code = 0;   // 0 ok, 1 validation, 2 computation, 3 I/O or parse
    std::string output;  // rendered report
};

// Dispatches one subcommand against a loaded problem. `problem` may be null
// for standalone commands (corpus). args[0] is the command name; flags are
// --format text|json, --trunc <D>, --cap <N>, --count <N>, --oracle.
CommandResult run_command(const ProblemFile* problem, const std::vector<std::string>& args);

} // namespace mfwb
