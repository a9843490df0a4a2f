#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "curvechi/graph.hpp"

namespace curvechi {

enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitBudget = 3, kExitIo = 4 };

struct RunConfig {
    std::string subcommand;
    std::string operation;  // reduce only
    std::string input;
    std::string output;
    SolverBudget budget = SolverBudget::from_env();
    std::optional<std::uint64_t> seed;
};

// Parses arguments (without the program name) and runs one subcommand.
// Results go to `out` unless an output path is given; errors go to `err` as
// a single "error: <Kind>: <message>" line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvechi
