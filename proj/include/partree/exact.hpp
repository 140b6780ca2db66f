#pragma once

#include "partree/graph.hpp"
#include "partree/solve_result.hpp"

namespace partree {

// Exact minimization over all partition trees via the recursive formulas,
// memoized over connected vertex subsets. Exponential on general graphs;
// polynomial-ish on trees with few connected subtrees. Disconnected inputs
// are solved per component and combined (sum for the sum measures, max for
// the max measures), yielding a forest witness.
SolveResult vpt_sum_exact(const Graph& g, const SolveOptions& opts = {});
SolveResult vpt_max_exact(const Graph& g, const SolveOptions& opts = {});
SolveResult ept_sum_exact(const Graph& g, const SolveOptions& opts = {});
SolveResult ept_max_exact(const Graph& g, const SolveOptions& opts = {});

// DC-value straight from the bipartition definition (disconnected clusters
// split at zero cost), independent of the edge-partition-tree route. Small
// instances only; `budget` caps memo entries plus bipartitions tried.
std::int64_t dc_partition_reference(const Graph& g, std::int64_t budget = std::int64_t{1} << 22);

}  // namespace partree
