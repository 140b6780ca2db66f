#pragma once

#include "partree/graph.hpp"
#include "partree/solve_result.hpp"

namespace partree {

// Recognition witness: a generating tree when the graph is trivially
// perfect, otherwise the vertices of an induced P_4 or C_4.
struct TPWitness {
    bool is_tp = false;
    DecompTree generating_tree{TreeKind::Vpt};
    VertexSet obstruction;        // 4 vertices, in path/cycle order
    bool obstruction_is_cycle = false;
};

// Recursive universal-vertex peeling per component. A connected graph with
// no universal vertex contains an induced P_4 or C_4, which is extracted as
// the obstruction.
TPWitness recognize_tp(const Graph& g);

// For trivially perfect g, VPT-sum equals n + m. Returns n + m after
// checking that identity against the exact solver; throws if g is not TP.
std::int64_t tp_sum_identity(const Graph& g, const SolveOptions& opts = {});

struct TPCompletion {
    std::int64_t added_edges = 0;  // k = VPT-sum(g) - n - m
    Graph completed;               // g plus all ancestor-descendant pairs of the witness
};

// Minimum trivially perfect completion via the optimal VPT: the completed
// graph is TP with exactly m + k edges.
TPCompletion min_tp_completion(const Graph& g, const SolveOptions& opts = {});

}  // namespace partree
