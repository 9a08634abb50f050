#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "report.hpp"

namespace mbbox::cli {

/// Runs one command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Evaluates every point of a grid document. Throws InputError on a malformed grid.
Report sweep_grid(const nlohmann::json& grid, double tol);

}  // namespace mbbox::cli
