#include <doctest.h>

#include "partree/families.hpp"

using namespace partree;

TEST_CASE("basic families") {
    CHECK(path(1).n() == 1);
    CHECK(path(1).m() == 0);
    CHECK(star(2).m() == 1);  // star(2) = K_2
    Graph p4 = path(4);
    CHECK(p4.edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(complete(5).m() == 10);
    CHECK_THROWS(path(0));
    CHECK_THROWS(star(0));
}

TEST_CASE("caterpillar generator") {
    // caterpillar([2,2]) is a P_4 up to labels
    Graph c = caterpillar({2, 2});
    CHECK(c.n() == 4);
    CHECK(c.classify().is_caterpillar);
    CHECK(c.classify().is_path);

    CHECK(caterpillar({4}).edges() == star(4).edges());
    CHECK(caterpillar({1, 1, 1}).edges() == path(3).edges());
    CHECK_THROWS(caterpillar({2, 0}));
    CHECK_THROWS(caterpillar({}));
}

TEST_CASE("broomstick construction") {
    Graph b3 = broomstick(3);
    CHECK(b3.n() == 14);  // 2^3 + (3/4) 2^3
    CHECK(b3.m() == 13);
    CHECK(b3.classify().is_caterpillar);
    CHECK(b3.degree(8) == 6);  // star center: 5 leaves + the path end

    Graph b4 = broomstick(4);
    CHECK(b4.n() == 28);
    CHECK(b4.classify().is_caterpillar);

    CHECK(broomstick(2).n() == 7);  // permitted, below the intended range
    CHECK_THROWS(broomstick(1));
}

TEST_CASE("random generators are deterministic and well formed") {
    CHECK(random_tree(1, 42).n() == 1);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 12);
        Graph a = random_tree(n, seed);
        Graph b = random_tree(n, seed);
        CHECK(a.edges() == b.edges());
        CHECK(a.m() == n - 1);
        CHECK(a.classify().is_tree);
    }

    // forced complete graph
    CHECK(random_connected_graph(5, 10, 9).m() == 10);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_connected_graph(6, 9, seed);
        CHECK(g.m() == 9);
        CHECK(g.classify().is_connected);
        CHECK(random_connected_graph(6, 9, seed).edges() == g.edges());
    }
    CHECK_THROWS(random_connected_graph(4, 2, 1));
    CHECK_THROWS(random_connected_graph(4, 7, 1));
}

TEST_CASE("random trees hit different shapes") {
    // sanity that the Prufer draw is not collapsing
    bool saw_star = false, saw_path = false, saw_other = false;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto c = random_tree(5, seed).classify();
        if (c.is_star) saw_star = true;
        if (c.is_path) saw_path = true;
        if (!c.is_star && !c.is_path) saw_other = true;
    }
    CHECK(saw_star);
    CHECK(saw_path);
    CHECK(saw_other);
}
