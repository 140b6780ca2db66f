#include <doctest.h>

#include <random>
#include <set>

#include "partree/exact.hpp"
#include "partree/families.hpp"
#include "partree/oracle.hpp"
#include "partree/trivially_perfect.hpp"

using namespace partree;

namespace {

// independent TP test: no induced P_4 and no induced C_4
bool p4_c4_free(const Graph& g) {
    const auto& vs = g.vertices();
    std::size_t n = vs.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    VertexId q[4] = {vs[a], vs[b], vs[c], vs[d]};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.edge_id(q[i], q[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    bool all_two = deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2;
                    if (edges == 4 && all_two) return false;  // C_4
                    if (edges == 3) {
                        int ones = 0, twos = 0;
                        for (int i = 0; i < 4; ++i) {
                            ones += deg[i] == 1;
                            twos += deg[i] == 2;
                        }
                        if (ones == 2 && twos == 2) return false;  // P_4
                    }
                }
    return true;
}

// ancestor-descendant pairs of a VPT, as a normalized edge set
std::set<std::pair<VertexId, VertexId>> closure_pairs(const DecompTree& t) {
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (int x = 0; x < t.size(); ++x) {
        for (int a = t.nodes[x].parent; a >= 0; a = t.nodes[a].parent) {
            VertexId u = t.nodes[a].label_id, v = t.nodes[x].label_id;
            pairs.emplace(std::min(u, v), std::max(u, v));
        }
    }
    return pairs;
}

Graph random_tp_graph(int n, std::uint64_t seed) {
    // anc-desc closure of a random rooted tree is trivially perfect by
    // construction
    Graph shape = random_tree(n, seed);
    DecompTree rooted(TreeKind::Vpt);
    std::vector<int> node_of(n, -1);
    std::vector<VertexId> order{0};
    node_of[0] = rooted.add_root(LabelKind::Vertex, 0);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        VertexId u = order[head];
        for (auto [w, e] : shape.incident(u)) {
            if (seen[w]) continue;
            seen[w] = true;
            node_of[w] = rooted.add_child(node_of[u], LabelKind::Vertex, w);
            order.push_back(w);
        }
    }
    auto pairs = closure_pairs(rooted);
    return Graph(n, {pairs.begin(), pairs.end()});
}

}  // namespace

TEST_CASE("recognize_tp examples") {
    CHECK(recognize_tp(complete(3)).is_tp);
    CHECK(recognize_tp(star(4)).is_tp);
    CHECK(recognize_tp(path(1)).is_tp);
    CHECK(recognize_tp(path(3)).is_tp);

    TPWitness w = recognize_tp(path(4));
    CHECK_FALSE(w.is_tp);
    REQUIRE(w.obstruction.size() == 4);
    CHECK_FALSE(w.obstruction_is_cycle);
    // the reported obstruction really is an induced P_4
    Graph ob = path(4).induced(VertexSet(w.obstruction.begin(), w.obstruction.end()));
    CHECK(ob.m() == 3);

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    TPWitness wc = recognize_tp(c4);
    CHECK_FALSE(wc.is_tp);
    CHECK(wc.obstruction_is_cycle);
}

TEST_CASE("generating trees are valid VPTs whose closure is the edge set") {
    // K_3's generating tree is a path of three nodes
    TPWitness w = recognize_tp(complete(3));
    REQUIRE(w.is_tp);
    CHECK(w.generating_tree.size() == 3);
    CHECK(validate(complete(3), w.generating_tree).valid);
    auto pairs = closure_pairs(w.generating_tree);
    CHECK(pairs.size() == 3);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = random_tp_graph(2 + seed % 8, seed);
        TPWitness witness = recognize_tp(g);
        REQUIRE(witness.is_tp);
        CHECK(validate(g, witness.generating_tree).valid);
        std::set<std::pair<VertexId, VertexId>> edges(g.edges().begin(), g.edges().end());
        CHECK(closure_pairs(witness.generating_tree) == edges);
    }
}

TEST_CASE("recognition agrees with forbidden-subgraph enumeration on n <= 5") {
    // n = 6 is covered by the acceptance suite; this keeps the unit run fast
    for (int n = 1; n <= 5; ++n) {
        std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::vector<std::pair<VertexId, VertexId>> edges;
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if ((mask >> p) & 1) edges.push_back(pairs[p]);
            Graph g(n, edges);
            CHECK(recognize_tp(g).is_tp == p4_c4_free(g));
        }
    }
}

TEST_CASE("tp_sum_identity") {
    CHECK(tp_sum_identity(complete(3)) == 6);
    CHECK(tp_sum_identity(star(4)) == 7);
    CHECK(tp_sum_identity(path(1)) == 1);
    CHECK_THROWS(tp_sum_identity(path(4)));

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = random_tp_graph(2 + seed % 8, 1000 + seed);
        CHECK(tp_sum_identity(g) == g.n() + g.m());
    }
}

TEST_CASE("min_tp_completion examples") {
    // TP inputs need nothing
    TPCompletion done = min_tp_completion(star(4));
    CHECK(done.added_edges == 0);
    CHECK(done.completed.edges() == star(4).edges());

    TPCompletion p4 = min_tp_completion(path(4));
    CHECK(p4.added_edges == 1);  // vpt_sum 8 - 4 - 3
    CHECK(p4.completed.m() == 4);
    CHECK(recognize_tp(p4.completed).is_tp);

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    TPCompletion cc = min_tp_completion(c4);
    CHECK(cc.added_edges == vpt_sum_exact(c4).value - 4 - 4);
    CHECK(cc.added_edges == brute_tp_completion(c4));
    CHECK(recognize_tp(cc.completed).is_tp);
    CHECK(cc.completed.m() == 4 + cc.added_edges);
}

TEST_CASE("completion matches the exhaustive oracle on random graphs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
        int m = n - 1 + static_cast<int>(rng() % (max_m - (n - 1) + 1));
        Graph g = random_connected_graph(n, m, rng());
        CHECK(min_tp_completion(g).added_edges == brute_tp_completion(g));
    }
}
