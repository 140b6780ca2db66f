#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "partree/graph.hpp"

namespace partree {

// Exhaustive instance corpora for the verification suites.

using GraphVisitor = std::function<void(const Graph&)>;

// Every labeled tree on n vertices, once per Prufer code (n^{n-2} trees).
void for_each_labeled_tree(int n, const GraphVisitor& visit);

// Every graph on vertices 0..n-1, one per edge subset (2^{n(n-1)/2} graphs);
// optionally only the connected ones. Meant for n <= 6.
void for_each_graph(int n, bool connected_only, const GraphVisitor& visit);

// Isomorphism-invariant encodings used to deduplicate corpora: AHU form
// rooted at the tree center(s), and the lexicographically smallest adjacency
// bitstring over all vertex permutations (n <= 8).
std::string canonical_tree_form(const Graph& tree);
std::string canonical_graph_form(const Graph& g);

// Random tree whose spine-tree has at most max_spine_leaves leaves, so the
// bounded-spine solver stays polynomial on it. Deterministic in the seed.
Graph random_low_spine_tree(int n, int max_spine_leaves, std::uint64_t seed);

}  // namespace partree
