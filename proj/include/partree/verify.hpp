#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "partree/solve_result.hpp"

namespace partree {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::int64_t cases = 0;
    double seconds = 0.0;
    std::string detail;  // first failure, or a short summary
};

// Solver-vs-oracle equivalence over every labeled tree on n <= max_n
// vertices. Trees up to full_brute_n get the brute-force oracles per
// labeling; larger sizes are deduplicated by canonical form with the oracles
// run once per isomorphism class, while the four solvers still run on every
// labeling up to full_solver_n and on every stride-th labeling beyond.
CheckResult check_oracle_equivalence(int max_n, int full_brute_n, int full_solver_n, int stride);

// dc_partition_reference == ept_sum_exact on every connected graph with
// n <= max_n plus `random_count` random connected graphs on up to random_n
// vertices.
CheckResult check_thm3_identity(int max_n, int random_count, int random_n, std::uint64_t seed);

// DC(star(n)) = n(n+1)/2 - 1 up to star_max; EPT-sum(path(2^k)) = k 2^k and
// EPT-max(path(2^k)) = k up to path_k_max.
CheckResult check_closed_forms(int star_max, int path_k_max);

// DC(T) - DC(T') equals the rotation formula on random (graph, clustering
// tree, rotatable node) triples.
CheckResult check_rotation_identity(int cases, std::uint64_t seed);

// Every brute-force-optimal clustering tree of every tree on n <= max_n
// vertices has connected clusters and single-edge cuts.
CheckResult check_optimal_clusterings_viable(int max_n);

// Edge-removal inequalities on all trees with n <= max_n: for every edge
// DC(G_u)+DC(G_v) <= DC(G)-min(n_u,n_v), and for balanced edges
// DC(G_u)+DC(G_v) <= DC(G)-max(n_u,n_v).
CheckResult check_edge_removal_inequalities(int max_n);

// balanced_clustering <= 2x exact on all trees n <= max_n and on
// random_count random trees with up to random_max_n vertices; the balanced
// witness must be viable with connected clusters.
CheckResult check_two_approximation(int max_n, int random_count, int random_max_n,
                                    std::uint64_t seed, const SolveOptions& opts);

// Broomstick family: balanced value hits the closed form exactly, the exact
// DP stays under the separate-path-and-star bound, and the approximation gap
// is at least (3/8)2^k / W*.
CheckResult check_broomstick(const std::vector<int>& ks);

// min_tp_completion matches the exhaustive completion oracle on all graphs
// with n <= max_n; the completed graph is TP with m + k edges.
CheckResult check_tp_bridge(int max_n);

// caterpillar DP and bounded-spine solver match the exact solvers on every
// star-size composition up to total max_cat_n and on random trees with few
// spine leaves; also checks the empirical O(n^3) scaling of the DP.
CheckResult check_dp_consistency(int max_cat_n, int random_count, int random_max_n,
                                 int max_spine_leaves, std::uint64_t seed);
CheckResult check_caterpillar_scaling();

// auto dispatch agrees with --algorithm exact on a spot-check corpus.
CheckResult check_auto_dispatch(std::uint64_t seed);

enum class VerifyLevel { Quick, Full };

// The suites behind `verify quick` (all trees on up to 7 vertices) and
// `verify full` (trees up to 9 vertices plus all graphs up to 6).
std::vector<CheckResult> run_verification(VerifyLevel level, std::ostream* progress);

}  // namespace partree
