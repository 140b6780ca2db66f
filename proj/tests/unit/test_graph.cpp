#include <doctest.h>

#include <algorithm>
#include <random>

#include "partree/families.hpp"
#include "partree/graph.hpp"

using namespace partree;

TEST_CASE("parse_edgelist builds P_3 and a star") {
    Graph p3 = parse_edgelist("0 1\n1 2\n");
    CHECK(p3.n() == 3);
    CHECK(p3.m() == 2);
    CHECK(p3.edge(0) == std::pair<VertexId, VertexId>{0, 1});

    Graph s4 = parse_edgelist("0 1\n0 2\n0 3\n");
    CHECK(s4.n() == 4);
    CHECK(s4.m() == 3);
    CHECK(s4.degree(0) == 3);
}

TEST_CASE("parse_edgelist comments, blanks and isolated vertices") {
    Graph g = parse_edgelist("# a comment\n\nv 7\n0 1\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 1);
    CHECK(g.has_vertex(7));
    CHECK(g.degree(7) == 0);
}

TEST_CASE("parse_edgelist rejects bad input with line numbers") {
    CHECK_THROWS_AS(parse_edgelist("0 1\n0 1\n"), ParseError);  // duplicate edge
    CHECK_THROWS_AS(parse_edgelist("2 2\n"), ParseError);       // self-loop
    CHECK_THROWS_AS(parse_edgelist("0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("0 1 2\n"), ParseError);
    try {
        parse_edgelist("0 1\n1 1\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("edge list round trip") {
    Graph g = parse_edgelist("v 9\n0 1\n1 2\n");
    Graph h = parse_edgelist(to_edgelist(g));
    CHECK(h.vertices() == g.vertices());
    CHECK(h.edges() == g.edges());
}

TEST_CASE("connected components") {
    Graph p3 = path(3);
    CHECK(p3.connected_components() == std::vector<VertexSet>{{0, 1, 2}});

    Graph two_isolated({0, 2}, {});
    CHECK(two_isolated.connected_components() == std::vector<VertexSet>{{0}, {2}});

    Graph two_k2(4, {{0, 1}, {2, 3}});
    CHECK(two_k2.connected_components() == std::vector<VertexSet>{{0, 1}, {2, 3}});
}

TEST_CASE("remove_vertex and remove_edge preserve ids") {
    Graph p4 = path(4);
    auto parts = p4.remove_edge(1);  // b-c
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].vertices() == VertexSet{0, 1});
    CHECK(parts[1].vertices() == VertexSet{2, 3});

    auto stars = star(4).remove_vertex(0);
    CHECK(stars.size() == 3);
    for (const auto& s : stars) CHECK(s.n() == 1);

    auto k3 = complete(3).remove_edge(0);
    CHECK(k3.size() == 1);  // K_3 minus an edge stays connected
    CHECK(k3[0].m() == 2);

    CHECK_THROWS(p4.remove_vertex(99));
    CHECK_THROWS(p4.remove_edge(99));
}

TEST_CASE("remove_edge on a tree always yields two components covering n") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph t = random_tree(9, seed);
        for (EdgeId e = 0; e < t.m(); ++e) {
            auto parts = t.remove_edge(e);
            REQUIRE(parts.size() == 2);
            CHECK(parts[0].n() + parts[1].n() == t.n());
        }
    }
}

TEST_CASE("spine_tree and its degenerate conventions") {
    // caterpillar with spine x1-x2 and one pendant each
    Graph cat = caterpillar({2, 2});
    auto [spine, d] = cat.spine_tree();
    CHECK(spine.n() == 2);
    CHECK(spine.m() == 1);
    CHECK(d == 2);

    auto [star_spine, star_d] = star(4).spine_tree();
    CHECK(star_spine.n() == 1);
    CHECK(star_d == 1);

    // spider with 3 legs of length 2: spine is a star on 4, d = 3
    Graph spider = parse_edgelist("0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n");
    auto [sp, sd] = spider.spine_tree();
    CHECK(sp.n() == 4);
    CHECK(sd == 3);

    CHECK(path(1).spine_tree().second == 0);
    CHECK(path(2).spine_tree().second == 0);
    CHECK_THROWS(complete(3).spine_tree());
}

TEST_CASE("balanced edges") {
    CHECK(path(4).balanced_edges() == std::vector<EdgeId>{1});
    CHECK(path(3).balanced_edges() == std::vector<EdgeId>{0, 1});

    // the broomstick has exactly one balanced edge, splitting 7|7
    Graph b3 = broomstick(3);
    auto balanced = b3.balanced_edges();
    REQUIRE(balanced.size() == 1);
    auto parts = b3.remove_edge(balanced[0]);
    CHECK(parts[0].n() == 7);
    CHECK(parts[1].n() == 7);

    CHECK_THROWS(complete(3).balanced_edges());
    CHECK_THROWS(path(1).balanced_edges());
}

TEST_CASE("balanced edges are invariant under relabeling") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        Graph t = random_tree(10, trial);
        std::vector<int> perm(10);
        for (int i = 0; i < 10; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<VertexId, VertexId>> relabeled;
        for (auto [u, v] : t.edges()) relabeled.emplace_back(perm[u], perm[v]);
        Graph s(10, relabeled);

        // compare the selected edge sets, mapped through the permutation
        std::vector<std::pair<int, int>> a, b;
        for (EdgeId e : t.balanced_edges()) {
            auto [u, v] = t.edge(e);
            int pu = perm[u], pv = perm[v];
            a.emplace_back(std::min(pu, pv), std::max(pu, pv));
        }
        for (EdgeId e : s.balanced_edges()) {
            auto [u, v] = s.edge(e);
            b.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("classify") {
    auto c = star(4).classify();
    CHECK(c.is_star);
    CHECK(c.is_caterpillar);
    CHECK(c.is_tree);
    CHECK_FALSE(c.is_path);

    Graph spider = parse_edgelist("0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n");
    CHECK_FALSE(spider.classify().is_caterpillar);
    CHECK(spider.classify().is_tree);

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(c4.classify().is_tree);
    CHECK(c4.classify().is_connected);

    CHECK(path(5).classify().is_path);
    CHECK(path(5).classify().is_caterpillar);
    CHECK(path(1).classify().is_star);
    CHECK(caterpillar({1, 3, 1, 2}).classify().is_caterpillar);
}

TEST_CASE("graph constructor invariants") {
    CHECK_THROWS(Graph(3, {{0, 0}}));          // self-loop
    CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}}));  // duplicate, unordered
    CHECK_THROWS(Graph(2, {{0, 5}}));          // endpoint outside
    CHECK_THROWS(Graph({1, 1}, {}));           // duplicate vertex id
}
