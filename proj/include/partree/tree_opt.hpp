#pragma once

#include <unordered_map>
#include <vector>

#include "partree/graph.hpp"
#include "partree/solve_result.hpp"

namespace partree {

// A caterpillar as a row of stars strung together along its spine. The
// canonical decomposition takes the spine to be the spine-tree when that is
// nonempty, otherwise a single central vertex (smallest id for n <= 2), so
// p=1 covers K_1, K_2 and stars.
struct CaterpillarDecomp {
    std::vector<VertexId> spine;  // x_1..x_p in path order
    std::vector<int> star_sizes;  // n(X_i) >= 1, spine vertex included
    std::unordered_map<VertexId, int> star_of;
};

CaterpillarDecomp caterpillar_decompose(const Graph& g);

// Interval DP along the spine, O(n^3). Exact DC-value with a clustering-tree
// witness; matches ept_sum_exact on the same input.
SolveResult caterpillar_dc(const Graph& g);
SolveResult caterpillar_vpt_sum(const Graph& g);

// Exact EPT_SUM / VPT_SUM for arbitrary trees in n^{O(d)} time where d is
// the leaf count of the spine-tree: cut candidates are restricted to
// internal edges (EPT) or internal vertices (VPT) of the input tree, with a
// closed form for star clusters. Memoized on connected subtree keys.
SolveResult bounded_spine_solver(const Graph& g, MeasureKind measure,
                                 const SolveOptions& opts = {});

// Recursive balanced-cut clustering (ties broken by smallest edge id); a
// 2-approximation of the DC-value on trees.
SolveResult balanced_clustering(const Graph& g);

// Greedy improvement: repeatedly applies a rotation with strictly positive
// delta until none exists. Monotone non-increasing in DC, terminates.
SolveResult local_search_rotations(const Graph& g, const DecompTree& start);

}  // namespace partree
