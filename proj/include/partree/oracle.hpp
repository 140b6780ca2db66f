#pragma once

#include <functional>
#include <vector>

#include "partree/decomp_tree.hpp"
#include "partree/graph.hpp"

namespace partree {

struct OracleOptions {
    int max_n = 10;  // instance-size cap; exceeding it is a hard error
};

using TreeVisitor = std::function<void(const DecompTree&)>;

// Stream every valid VPT / EPT of g exactly once (children in canonical
// order). The visited tree is reused between calls; copy it to keep it.
void enumerate_vpts(const Graph& g, const TreeVisitor& visit, const OracleOptions& opts = {});
void enumerate_epts(const Graph& g, const TreeVisitor& visit, const OracleOptions& opts = {});

std::vector<DecompTree> all_vpts(const Graph& g, const OracleOptions& opts = {});
std::vector<DecompTree> all_epts(const Graph& g, const OracleOptions& opts = {});

// Minimum of value() over the enumerated trees of the measure's kind.
// Clustering trees are enumerated over all recursive bipartitions, with
// disconnected clusters split componentwise (they carry empty cuts in any
// minimum-value tree).
std::int64_t brute_min(const Graph& g, MeasureKind measure, const OracleOptions& opts = {});

// All clustering trees attaining the brute-force minimum DC-value.
std::vector<DecompTree> brute_optimal_clusterings(const Graph& g, const OracleOptions& opts = {});

// Minimum number of edges to add so the graph becomes trivially perfect,
// by exhaustive search over edge supersets of increasing size.
int brute_tp_completion(const Graph& g, const OracleOptions& opts = {.max_n = 6});

}  // namespace partree
