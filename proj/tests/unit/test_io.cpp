#include <doctest.h>

#include "partree/dispatch.hpp"
#include "partree/exact.hpp"
#include "partree/families.hpp"
#include "partree/io.hpp"

using namespace partree;
using nlohmann::json;

TEST_CASE("graph json round trip") {
    Graph g = path(4);
    g.set_label(0, "head");
    json j = graph_to_json(g);
    CHECK(j["n"] == 4);
    CHECK(j["edges"].size() == 3);
    Graph back = graph_from_json(j);
    CHECK(back.edges() == g.edges());
    CHECK(back.label(0) == std::optional<std::string>("head"));

    // non-contiguous ids survive through the vertices field
    Graph sparse({2, 5, 9}, {{2, 9}});
    Graph sparse_back = graph_from_json(graph_to_json(sparse));
    CHECK(sparse_back.vertices() == sparse.vertices());
    CHECK(sparse_back.edges() == sparse.edges());
}

TEST_CASE("tree json round trip, single root and forest") {
    Graph g = path(3);
    SolveResult r = ept_sum_exact(g);
    json j = tree_to_json(r.witness);
    DecompTree back = tree_from_json(j);
    CHECK(back.kind == TreeKind::Ept);
    CHECK(structurally_equal(back, r.witness));
    CHECK(value(g, back, MeasureKind::EptSum) == r.value);

    Graph forest(4, {{0, 1}, {2, 3}});
    SolveResult fr = vpt_sum_exact(forest);
    json fj = tree_to_json(fr.witness);
    CHECK(fj.is_array());
    DecompTree fback = tree_from_json(fj, TreeKind::Vpt);
    CHECK(structurally_equal(fback, fr.witness));
}

TEST_CASE("tree kind inference") {
    Graph g = path(3);
    DecompTree clustering = tree_from_json(tree_to_json(solve_with(g, MeasureKind::Dc,
                                                                   Algorithm::Exact).witness));
    CHECK(clustering.kind == TreeKind::Clustering);
    DecompTree vpt = tree_from_json(tree_to_json(vpt_sum_exact(g).witness));
    CHECK(vpt.kind == TreeKind::Vpt);
}

TEST_CASE("dot export shapes leaves as boxes") {
    Graph g = path(2);
    SolveResult r = ept_sum_exact(g);
    std::string dot = tree_to_dot(g, r.witness);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("shape=box") != std::string::npos);
    CHECK(dot.find("shape=circle") != std::string::npos);
    CHECK(dot.find("e0 (0-1)") != std::string::npos);
}

TEST_CASE("family specs") {
    json spec = {{"family", "broomstick"}, {"params", {{"k", 3}}}};
    CHECK(graph_from_family_spec(spec).n() == 14);

    json rt = {{"family", "random-tree"}, {"params", {{"n", 12}}}, {"seed", 5}};
    Graph a = graph_from_family_spec(rt);
    Graph b = graph_from_family_spec(rt);
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() == random_tree(12, 5).edges());

    json cat = {{"family", "caterpillar"}, {"params", {{"sizes", {3, 1, 4}}}}};
    CHECK(graph_from_family_spec(cat).n() == 8);

    CHECK_THROWS(graph_from_family_spec(json{{"family", "moebius"}}));
}

TEST_CASE("measure and algorithm names") {
    CHECK(measure_from_name("ept-sum") == MeasureKind::EptSum);
    CHECK(measure_from_name("dc") == MeasureKind::Dc);
    CHECK_THROWS(measure_from_name("zpt-sum"));
    CHECK(measure_name(MeasureKind::VptMax) == "vpt-max");
    CHECK(algorithm_from_name("bounded-spine") == Algorithm::BoundedSpine);
    CHECK(algorithm_name(Algorithm::LocalSearch) == "local-search");
    CHECK_THROWS(algorithm_from_name("quantum"));
}

TEST_CASE("dispatch compatibility rules") {
    // dc via exact equals ept-sum, with a clustering witness
    Graph g = path(5);
    SolveResult dc = solve_with(g, MeasureKind::Dc, Algorithm::Exact);
    CHECK(dc.value == ept_sum_exact(g).value);
    CHECK(dc.witness.kind == TreeKind::Clustering);
    CHECK(value(g, dc.witness, MeasureKind::Dc) == dc.value);

    SolveResult via_cat = solve_with(star(4), MeasureKind::EptSum, Algorithm::Caterpillar);
    CHECK(via_cat.value == 9);
    CHECK(via_cat.witness.kind == TreeKind::Ept);

    CHECK_THROWS_AS(solve_with(complete(4), MeasureKind::EptSum, Algorithm::Caterpillar),
                    IncompatibleAlgorithm);
    CHECK_THROWS_AS(solve_with(path(4), MeasureKind::VptMax, Algorithm::Balanced),
                    IncompatibleAlgorithm);
    CHECK_THROWS_AS(solve_with(complete(4), MeasureKind::EptSum, Algorithm::BoundedSpine),
                    IncompatibleAlgorithm);

    // auto picks something value-equivalent to exact everywhere
    for (MeasureKind m : {MeasureKind::VptSum, MeasureKind::VptMax, MeasureKind::EptSum,
                          MeasureKind::EptMax, MeasureKind::Dc}) {
        CHECK(solve_with(broomstick(3), m, Algorithm::Auto).value ==
              solve_with(broomstick(3), m, Algorithm::Exact).value);
    }
    CHECK(solve_with(broomstick(3), MeasureKind::EptSum, Algorithm::Auto).algorithm ==
          "caterpillar");
    CHECK(solve_with(complete(4), MeasureKind::EptSum, Algorithm::Auto).algorithm == "exact");
}

TEST_CASE("local search through the dispatcher starts from the balanced tree") {
    Graph b3 = broomstick(3);
    SolveResult ls = solve_with(b3, MeasureKind::Dc, Algorithm::LocalSearch);
    CHECK(ls.value <= 61);
    CHECK(ls.value >= 58);
}

TEST_CASE("solve result json carries the fields") {
    SolveResult r = ept_sum_exact(path(4));
    json j = solve_result_to_json(r);
    CHECK(j["value"] == 8);
    CHECK(j["measure"] == "ept-sum");
    CHECK(j["algorithm"] == "exact");
    CHECK(j["stats"]["subproblems"].get<std::int64_t>() > 0);
    CHECK(j.contains("witness"));
}
