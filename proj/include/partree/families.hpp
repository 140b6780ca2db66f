#pragma once

#include <cstdint>
#include <vector>

#include "partree/graph.hpp"

namespace partree {

// Deterministic generators for the instance families used in tests and
// benchmarks. All of them produce canonical labelings: paths run 0-1-...,
// stars have center 0, caterpillar spines come first in id order.

Graph path(int n);
Graph star(int n);  // n counts the whole star including its center
Graph complete(int n);

// Stars X_1..X_p strung together; spine ids 0..p-1, pendant leaves appended
// star by star.
Graph caterpillar(const std::vector<int>& star_sizes);

// Path on 2^k vertices whose end is adjacent to the center of a star on
// (3/4)*2^k vertices. The family is defined for k >= 3; k = 2 is accepted
// for experiments but below the intended range.
Graph broomstick(int k);

// Uniform random labeled tree (Prufer-coded); same seed, same graph.
Graph random_tree(int n, std::uint64_t seed);

// Random tree plus uniformly chosen extra edges, n-1 <= m <= n(n-1)/2.
Graph random_connected_graph(int n, int m, std::uint64_t seed);

}  // namespace partree
