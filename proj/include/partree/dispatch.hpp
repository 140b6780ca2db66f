#pragma once

#include <stdexcept>
#include <string>

#include "partree/graph.hpp"
#include "partree/solve_result.hpp"

namespace partree {

enum class Algorithm { Auto, Exact, Caterpillar, BoundedSpine, Balanced, LocalSearch };

Algorithm algorithm_from_name(const std::string& name);
std::string algorithm_name(Algorithm a);

class IncompatibleAlgorithm : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Runs the requested algorithm, or for Auto picks per instance class:
// caterpillars (and stars/paths) go to the interval DP, other trees to the
// bounded-spine solver, everything else to the exact solver; the max
// measures always use the exact solver. Throws IncompatibleAlgorithm when
// the algorithm cannot handle the measure or instance.
SolveResult solve_with(const Graph& g, MeasureKind measure, Algorithm algorithm,
                       const SolveOptions& opts = {});

}  // namespace partree
