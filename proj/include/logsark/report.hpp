#pragma once

#include "logsark/dual_graph.hpp"
#include "logsark/problem.hpp"

#include <string>
#include <vector>

namespace logsark {

/// Deterministic DOT text: vertices sorted by (kind, birth index, id) and
/// labelled "id (self_int)", chain curves grouped in clusters.
std::string emit_dot(const DualGraph& g);

struct CommandResult {
    std::string text;
    int exit_code = 0;
    /// Graph text produced by the dot command.
    std::string dot;
};

std::vector<std::string> command_names();

/// Run one of validate, ledger, factorize, hj, dot, concat. Library errors
/// propagate as Error.
CommandResult run_command(const std::string& command, const Problem& p);

} // namespace logsark
