#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "locinv/graph_core.hpp"

namespace locinv {

// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_unsatisfiable = 2,
    exit_bad_input = 3,
    exit_resource = 4,
};

// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Reads an edge-list document or a single graph6 line, whichever the file holds.
Graph read_graph_file(const std::string& path);

}  // namespace locinv
