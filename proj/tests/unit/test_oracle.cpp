#include <doctest.h>

#include "partree/corpus.hpp"
#include "partree/exact.hpp"
#include "partree/families.hpp"
#include "partree/oracle.hpp"

using namespace partree;

TEST_CASE("enumeration counts on the definitional cases") {
    CHECK(all_vpts(path(1)).size() == 1);
    CHECK(all_vpts(path(2)).size() == 2);  // either vertex on top
    // each root choice of P_3 leaves a component whose sub-VPTs multiply:
    // 2 (root 0) + 1 (root 1) + 2 (root 2)
    CHECK(all_vpts(path(3)).size() == 5);

    CHECK(all_epts(path(2)).size() == 1);
    CHECK(all_epts(path(3)).size() == 2);
    CHECK(all_epts(path(4)).size() == 5);
    CHECK(all_epts(star(4)).size() == 6);   // 3 * 2 * 1 peeling orders
    CHECK(all_epts(complete(3)).size() == 6);  // 3 root edges x 2 EPTs of P_3
}

TEST_CASE("enumeration counts satisfy the recursive product rule") {
    // count(G) = sum over root edges of the product of component counts
    Graph g = caterpillar({2, 1, 2});
    std::size_t direct = all_epts(g).size();
    std::size_t recursive = 0;
    for (EdgeId e = 0; e < g.m(); ++e) {
        std::size_t product = 1;
        for (const Graph& comp : g.remove_edge(e)) product *= all_epts(comp).size();
        recursive += product;
    }
    CHECK(direct == recursive);
}

TEST_CASE("every enumerated tree validates and trees are pairwise distinct") {
    for (const Graph& g : {path(4), star(4), caterpillar({2, 2})}) {
        std::vector<DecompTree> vpts = all_vpts(g);
        for (const DecompTree& t : vpts) CHECK(validate(g, t).valid);
        for (std::size_t i = 0; i < vpts.size(); ++i)
            for (std::size_t j = i + 1; j < vpts.size(); ++j)
                CHECK_FALSE(structurally_equal(vpts[i], vpts[j]));

        std::vector<DecompTree> epts = all_epts(g);
        for (const DecompTree& t : epts) CHECK(validate(g, t).valid);
        for (std::size_t i = 0; i < epts.size(); ++i)
            for (std::size_t j = i + 1; j < epts.size(); ++j)
                CHECK_FALSE(structurally_equal(epts[i], epts[j]));
    }
}

TEST_CASE("enumeration is deterministic across runs") {
    auto a = all_vpts(star(4));
    auto b = all_vpts(star(4));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(structurally_equal(a[i], b[i]));
}

TEST_CASE("brute_min worked examples") {
    CHECK(brute_min(path(3), MeasureKind::EptSum) == 5);
    CHECK(brute_min(path(3), MeasureKind::VptMax) == 2);
    CHECK(brute_min(star(4), MeasureKind::Dc) == 9);
    CHECK(brute_min(path(4), MeasureKind::Dc) == 8);
}

TEST_CASE("brute_min handles disconnected graphs") {
    Graph forest(5, {{0, 1}, {2, 3}});
    CHECK(brute_min(forest, MeasureKind::EptSum) == 4);
    CHECK(brute_min(forest, MeasureKind::VptSum) == 3 + 3 + 1);
    CHECK(brute_min(forest, MeasureKind::Dc) == 4);
}

TEST_CASE("oracle caps are hard errors") {
    OracleOptions small{.max_n = 4};
    CHECK_THROWS_AS(brute_min(path(5), MeasureKind::EptSum, small), std::invalid_argument);
    CHECK_THROWS_AS(all_vpts(path(5), small), std::invalid_argument);
    CHECK_THROWS_AS(brute_tp_completion(path(8)), std::invalid_argument);
}

TEST_CASE("brute_optimal_clusterings finds all argmin trees") {
    auto optimal = brute_optimal_clusterings(path(4));
    REQUIRE(!optimal.empty());
    for (const DecompTree& t : optimal) {
        CHECK(validate(path(4), t).valid);
        CHECK(value(path(4), t, MeasureKind::Dc) == 8);
    }
}

TEST_CASE("brute_tp_completion examples") {
    CHECK(brute_tp_completion(star(4)) == 0);
    CHECK(brute_tp_completion(path(4)) == 1);
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(brute_tp_completion(c4) == 1);  // one chord suffices
}

TEST_CASE("labeled tree corpus has the right cardinalities") {
    // Cayley: n^{n-2} labeled trees
    long counts[8] = {0};
    for (int n = 1; n <= 6; ++n) for_each_labeled_tree(n, [&](const Graph&) { ++counts[n]; });
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 1);
    CHECK(counts[3] == 3);
    CHECK(counts[4] == 16);
    CHECK(counts[5] == 125);
    CHECK(counts[6] == 1296);

    // known unlabeled tree counts via the canonical form
    int classes[9] = {0};
    for (int n = 1; n <= 8; ++n) {
        std::unordered_map<std::string, bool> seen;
        for_each_labeled_tree(
            n, [&](const Graph& t) { seen.emplace(canonical_tree_form(t), true); });
        classes[n] = static_cast<int>(seen.size());
    }
    CHECK(classes[4] == 2);
    CHECK(classes[5] == 3);
    CHECK(classes[6] == 6);
    CHECK(classes[7] == 11);
    CHECK(classes[8] == 23);
}

TEST_CASE("graph corpus matches known counts") {
    long all = 0, connected = 0;
    for_each_graph(4, false, [&](const Graph&) { ++all; });
    for_each_graph(4, true, [&](const Graph&) { ++connected; });
    CHECK(all == 64);
    CHECK(connected == 38);  // labeled connected graphs on 4 vertices

    std::unordered_map<std::string, bool> seen;
    for_each_graph(4, false, [&](const Graph& g) { seen.emplace(canonical_graph_form(g), true); });
    CHECK(seen.size() == 11);  // unlabeled graphs on 4 vertices
}

TEST_CASE("random_low_spine_tree respects its promise") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 5 + static_cast<int>(seed % 30);
        Graph t = random_low_spine_tree(n, 4, seed);
        CHECK(t.n() == n);
        CHECK(t.classify().is_tree);
        CHECK(t.spine_tree().second <= 4);
    }
}
