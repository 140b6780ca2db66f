#include "partree/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "partree/corpus.hpp"
#include "partree/dispatch.hpp"
#include "partree/exact.hpp"
#include "partree/families.hpp"
#include "partree/oracle.hpp"
#include "partree/tree_opt.hpp"
#include "partree/trivially_perfect.hpp"

namespace partree {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    CheckResult result;
    explicit Checker(std::string name) { result.name = std::move(name); }

    void expect(bool cond, const std::function<std::string()>& describe) {
        ++result.cases;
        if (!cond && result.passed) {
            result.passed = false;
            result.detail = describe();
        }
    }

    CheckResult finish(Clock::time_point start) {
        result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return result;
    }
};

Checker make_checker(std::string name) {
    Checker c(std::move(name));
    c.result.passed = true;
    return c;
}

std::string describe_graph(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.n() << " edges=";
    for (const auto& [u, v] : g.edges()) out << u << "-" << v << " ";
    return out.str();
}

struct TestRng {
    std::mt19937_64 engine;
    explicit TestRng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t below(std::uint64_t bound) { return engine() % bound; }
};

constexpr std::array<MeasureKind, 4> kMeasures{MeasureKind::VptSum, MeasureKind::VptMax,
                                               MeasureKind::EptSum, MeasureKind::EptMax};

std::array<std::int64_t, 4> solver_values(const Graph& g) {
    return {vpt_sum_exact(g).value, vpt_max_exact(g).value, ept_sum_exact(g).value,
            ept_max_exact(g).value};
}

// one enumeration pass per tree kind, folding the sum and max minima together
std::array<std::int64_t, 4> brute_values(const Graph& g) {
    OracleOptions opts{.max_n = 10};
    std::int64_t vpt_sum = 0, vpt_max = 0, ept_sum = 0, ept_max = 0;
    bool first = true;
    enumerate_vpts(
        g,
        [&](const DecompTree& t) {
            std::int64_t s = value(g, t, MeasureKind::VptSum);
            std::int64_t m = value(g, t, MeasureKind::VptMax);
            if (first || s < vpt_sum) vpt_sum = s;
            if (first || m < vpt_max) vpt_max = m;
            first = false;
        },
        opts);
    first = true;
    enumerate_epts(
        g,
        [&](const DecompTree& t) {
            std::int64_t s = value(g, t, MeasureKind::EptSum);
            std::int64_t m = value(g, t, MeasureKind::EptMax);
            if (first || s < ept_sum) ept_sum = s;
            if (first || m < ept_max) ept_max = m;
            first = false;
        },
        opts);
    return {vpt_sum, vpt_max, ept_sum, ept_max};
}

// one representative per isomorphism class of labeled trees on n vertices
const std::vector<Graph>& tree_classes(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> reps;
    std::unordered_map<std::string, bool> seen;
    for_each_labeled_tree(n, [&](const Graph& t) {
        std::string canon = canonical_tree_form(t);
        if (seen.emplace(canon, true).second) reps.push_back(t);
    });
    return cache.emplace(n, std::move(reps)).first->second;
}

bool clusters_connected(const Graph& g, const DecompTree& t) {
    for (int x = 0; x < t.size(); ++x) {
        if (t.is_leaf(x)) continue;
        VertexSet cluster = t.leaf_vertices(x);
        if (g.induced(cluster).connected_components().size() > 1) return false;
    }
    return true;
}

bool cuts_single_edges(const Graph& g, const DecompTree& t) {
    for (int x = 0; x < t.size(); ++x) {
        if (t.is_leaf(x)) continue;
        VertexSet a = t.leaf_vertices(t.nodes[x].children[0]);
        VertexSet b = t.leaf_vertices(t.nodes[x].children[1]);
        std::unordered_map<VertexId, bool> in_a, in_b;
        for (VertexId v : a) in_a[v] = true;
        for (VertexId v : b) in_b[v] = true;
        int cut = 0;
        for (const auto& [u, v] : g.edges())
            if ((in_a.count(u) && in_b.count(v)) || (in_a.count(v) && in_b.count(u))) ++cut;
        if (cut != 1) return false;
    }
    return true;
}

DecompTree random_clustering_tree(const Graph& g, TestRng& rng) {
    VertexSet verts = g.vertices();
    for (std::size_t i = verts.size(); i > 1; --i)
        std::swap(verts[i - 1], verts[rng.below(i)]);
    DecompTree t(TreeKind::Clustering);
    std::function<void(std::size_t, std::size_t, int)> build = [&](std::size_t lo,
                                                                   std::size_t hi, int parent) {
        if (hi - lo == 1) {
            if (parent < 0)
                t.add_root(LabelKind::Vertex, verts[lo]);
            else
                t.add_child(parent, LabelKind::Vertex, verts[lo]);
            return;
        }
        int node = parent < 0 ? t.add_root(LabelKind::Internal, -1)
                              : t.add_child(parent, LabelKind::Internal, -1);
        std::size_t cut = lo + 1 + rng.below(hi - lo - 1);
        build(lo, cut, node);
        build(cut, hi, node);
    };
    build(0, verts.size(), -1);
    return t;
}

}  // namespace

CheckResult check_oracle_equivalence(int max_n, int full_brute_n, int full_solver_n, int stride) {
    auto start = Clock::now();
    Checker check = make_checker("oracle-equivalence");
    for (int n = 1; n <= max_n && check.result.passed; ++n) {
        std::unordered_map<std::string, std::array<std::int64_t, 4>> classes;
        std::int64_t counter = 0;
        for_each_labeled_tree(n, [&](const Graph& t) {
            ++counter;
            if (!check.result.passed) return;
            if (n <= full_brute_n) {
                auto solved = solver_values(t);
                auto brute = brute_values(t);
                check.expect(solved == brute, [&] {
                    return "solver/oracle mismatch on " + describe_graph(t);
                });
                return;
            }
            std::string canon = canonical_tree_form(t);
            auto it = classes.find(canon);
            if (it == classes.end()) {
                auto solved = solver_values(t);
                auto brute = brute_values(t);
                check.expect(solved == brute, [&] {
                    return "solver/oracle mismatch on " + describe_graph(t);
                });
                // witness consistency once per class
                for (MeasureKind m : kMeasures) {
                    SolveResult r = solve_with(t, m, Algorithm::Exact);
                    check.expect(validate(t, r.witness).valid &&
                                     value(t, r.witness, m) == r.value,
                                 [&] {
                                     return "witness inconsistency (" + measure_name(m) +
                                            ") on " + describe_graph(t);
                                 });
                }
                classes.emplace(std::move(canon), solved);
            } else if (n <= full_solver_n || counter % stride == 0) {
                check.expect(solver_values(t) == it->second, [&] {
                    return "label-dependent solver value on " + describe_graph(t);
                });
            }
        });
    }
    return check.finish(start);
}

CheckResult check_thm3_identity(int max_n, int random_count, int random_n, std::uint64_t seed) {
    auto start = Clock::now();
    Checker check = make_checker("ept-sum-equals-dc");
    for (int n = 1; n <= max_n; ++n) {
        for_each_graph(n, /*connected_only=*/true, [&](const Graph& g) {
            if (!check.result.passed) return;
            check.expect(dc_partition_reference(g) == ept_sum_exact(g).value,
                         [&] { return "mismatch on " + describe_graph(g); });
        });
    }
    TestRng rng(seed);
    for (int i = 0; i < random_count && check.result.passed; ++i) {
        int n = 2 + static_cast<int>(rng.below(random_n - 1));
        std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
        int m = n - 1 + static_cast<int>(rng.below(max_m - (n - 1) + 1));
        Graph g = random_connected_graph(n, m, seed ^ (0x9e37u + i));
        check.expect(dc_partition_reference(g) == ept_sum_exact(g).value,
                     [&] { return "mismatch on random " + describe_graph(g); });
    }
    return check.finish(start);
}

CheckResult check_closed_forms(int star_max, int path_k_max) {
    auto start = Clock::now();
    Checker check = make_checker("closed-forms");
    for (int n = 1; n <= star_max; ++n) {
        std::int64_t expected = static_cast<std::int64_t>(n) * (n + 1) / 2 - 1;
        check.expect(ept_sum_exact(star(n)).value == expected,
                     [&] { return "DC(star(" + std::to_string(n) + ")) != binom(n+1,2)-1"; });
    }
    for (int k = 0; k <= path_k_max; ++k) {
        int n = 1 << k;
        Graph p = path(n);
        check.expect(ept_sum_exact(p).value == static_cast<std::int64_t>(k) * n,
                     [&] { return "EPT-sum(path(2^" + std::to_string(k) + ")) != k*2^k"; });
        check.expect(ept_max_exact(p).value == k,
                     [&] { return "EPT-max(path(2^" + std::to_string(k) + ")) != k"; });
    }
    return check.finish(start);
}

CheckResult check_rotation_identity(int cases, std::uint64_t seed) {
    auto start = Clock::now();
    Checker check = make_checker("rotation-lemma");
    TestRng rng(seed);
    int done = 0;
    while (done < cases && check.result.passed) {
        int n = 3 + static_cast<int>(rng.below(6));
        std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
        int m = n - 1 + static_cast<int>(rng.below(max_m - (n - 1) + 1));
        Graph g = random_connected_graph(n, m, seed ^ (0x51ed2700u + done));
        DecompTree t = random_clustering_tree(g, rng);

        std::vector<std::pair<int, RotationDirection>> rotatable;
        for (int x = 0; x < t.size(); ++x) {
            if (t.nodes[x].children.size() != 2) continue;
            if (t.nodes[t.nodes[x].children[1]].children.size() == 2)
                rotatable.emplace_back(x, RotationDirection::Left);
            if (t.nodes[t.nodes[x].children[0]].children.size() == 2)
                rotatable.emplace_back(x, RotationDirection::Right);
        }
        if (rotatable.empty()) continue;
        auto [node, dir] = rotatable[rng.below(rotatable.size())];

        std::int64_t predicted = rotation_delta(g, t, node, dir);
        DecompTree rotated = rotate(t, node, dir);
        check.expect(validate(g, rotated).valid, [&] {
            return "rotation broke the clustering tree on " + describe_graph(g);
        });
        std::int64_t actual =
            value(g, t, MeasureKind::Dc) - value(g, rotated, MeasureKind::Dc);
        check.expect(predicted == actual, [&] {
            return "rotation delta mismatch on " + describe_graph(g);
        });
        // undoing the rotation restores the labeled structure
        RotationDirection back =
            dir == RotationDirection::Left ? RotationDirection::Right : RotationDirection::Left;
        check.expect(structurally_equal(rotate(rotated, node, back), t), [&] {
            return "rotation is not an involution on " + describe_graph(g);
        });
        ++done;
    }
    return check.finish(start);
}

CheckResult check_optimal_clusterings_viable(int max_n) {
    auto start = Clock::now();
    Checker check = make_checker("optimal-clusterings-viable");
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : tree_classes(n)) {
            if (!check.result.passed) break;
            for (const DecompTree& t : brute_optimal_clusterings(g)) {
                check.expect(is_viable(g, t) && clusters_connected(g, t) &&
                                 (g.m() == 0 || cuts_single_edges(g, t)),
                             [&] {
                                 return "non-viable optimal clustering tree on " +
                                        describe_graph(g);
                             });
            }
        }
    }
    return check.finish(start);
}

CheckResult check_edge_removal_inequalities(int max_n) {
    auto start = Clock::now();
    Checker check = make_checker("edge-removal-inequalities");
    for (int n = 2; n <= max_n; ++n) {
        for (const Graph& g : tree_classes(n)) {
            if (!check.result.passed) break;
            std::int64_t dc = ept_sum_exact(g).value;
            std::vector<EdgeId> balanced = g.balanced_edges();
            for (EdgeId e = 0; e < g.m(); ++e) {
                auto sides = g.remove_edge(e);
                std::int64_t du = ept_sum_exact(sides[0]).value;
                std::int64_t dv = ept_sum_exact(sides[1]).value;
                std::int64_t nu = sides[0].n(), nv = sides[1].n();
                check.expect(du + dv <= dc - std::min(nu, nv), [&] {
                    return "min-side inequality fails at edge " + std::to_string(e) + " of " +
                           describe_graph(g);
                });
                if (std::count(balanced.begin(), balanced.end(), e)) {
                    check.expect(du + dv <= dc - std::max(nu, nv), [&] {
                        return "balanced-edge inequality fails at edge " + std::to_string(e) +
                               " of " + describe_graph(g);
                    });
                }
            }
        }
    }
    return check.finish(start);
}

CheckResult check_two_approximation(int max_n, int random_count, int random_max_n,
                                    std::uint64_t seed, const SolveOptions& opts) {
    auto start = Clock::now();
    Checker check = make_checker("balanced-2-approximation");
    auto run_one = [&](const Graph& g, std::int64_t exact) {
        SolveResult bal = balanced_clustering(g);
        check.expect(bal.value <= 2 * exact, [&] {
            return "balanced " + std::to_string(bal.value) + " > 2*" + std::to_string(exact) +
                   " on " + describe_graph(g);
        });
        check.expect(validate(g, bal.witness).valid && is_viable(g, bal.witness) &&
                         clusters_connected(g, bal.witness) &&
                         value(g, bal.witness, MeasureKind::Dc) == bal.value,
                     [&] { return "balanced witness invalid on " + describe_graph(g); });
    };
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& g : tree_classes(n)) {
            if (!check.result.passed) break;
            run_one(g, ept_sum_exact(g).value);
        }
    TestRng rng(seed);
    for (int i = 0; i < random_count && check.result.passed; ++i) {
        int n = 2 + static_cast<int>(rng.below(random_max_n - 1));
        Graph g = random_tree(n, seed ^ (0xb5297a4du + i));
        try {
            run_one(g, bounded_spine_solver(g, MeasureKind::EptSum, opts).value);
        } catch (const BudgetExceeded& e) {
            check.expect(false, [&] {
                return std::string("exact side exceeded its budget (") + e.what() + ") on " +
                       describe_graph(g);
            });
        }
    }
    return check.finish(start);
}

CheckResult check_broomstick(const std::vector<int>& ks) {
    auto start = Clock::now();
    Checker check = make_checker("broomstick-family");
    for (int k : ks) {
        Graph g = broomstick(k);
        std::int64_t pow_k = std::int64_t{1} << k;
        std::int64_t balanced_form = k * pow_k + 9 * (std::int64_t{1} << (2 * k - 5)) +
                                     5 * (pow_k / 4) - 1;
        std::int64_t split_first_form =
            k * pow_k + 9 * (std::int64_t{1} << (2 * k - 5)) + 17 * (pow_k / 8) - 1;
        SolveResult bal = balanced_clustering(g);
        SolveResult exact = caterpillar_dc(g);
        check.expect(bal.value == balanced_form, [&] {
            return "balanced(broomstick(" + std::to_string(k) + ")) = " +
                   std::to_string(bal.value) + ", expected " + std::to_string(balanced_form);
        });
        check.expect(exact.value <= split_first_form, [&] {
            return "caterpillar_dc(broomstick(" + std::to_string(k) + ")) above the W* bound";
        });
        // ratio >= 1 + (3/8)2^k / W*, kept in integers
        check.expect(bal.value * split_first_form >=
                         (split_first_form + 3 * (pow_k / 8)) * exact.value,
                     [&] {
                         return "approximation gap below the lower bound at k=" +
                                std::to_string(k);
                     });
        check.expect(validate(g, bal.witness).valid && validate(g, exact.witness).valid,
                     [&] { return "broomstick witness invalid at k=" + std::to_string(k); });
    }
    return check.finish(start);
}

CheckResult check_tp_bridge(int max_n) {
    auto start = Clock::now();
    Checker check = make_checker("tp-completion-bridge");
    for (int n = 1; n <= max_n && check.result.passed; ++n) {
        std::unordered_map<std::string, bool> seen;
        for_each_graph(n, /*connected_only=*/false, [&](const Graph& g) {
            if (!check.result.passed) return;
            if (!seen.emplace(canonical_graph_form(g), true).second) return;
            TPCompletion completion = min_tp_completion(g);
            int oracle = brute_tp_completion(g);
            check.expect(completion.added_edges == oracle, [&] {
                return "completion size " + std::to_string(completion.added_edges) +
                       " != oracle " + std::to_string(oracle) + " on " + describe_graph(g);
            });
            check.expect(recognize_tp(completion.completed).is_tp &&
                             completion.completed.m() == g.m() + completion.added_edges,
                         [&] { return "bad completed graph on " + describe_graph(g); });
        });
    }
    return check.finish(start);
}

namespace {

void compositions(int total, std::vector<int>& parts, const std::function<void()>& emit) {
    if (total == 0) {
        emit();
        return;
    }
    for (int first = 1; first <= total; ++first) {
        parts.push_back(first);
        compositions(total - first, parts, emit);
        parts.pop_back();
    }
}

}  // namespace

CheckResult check_dp_consistency(int max_cat_n, int random_count, int random_max_n,
                                 int max_spine_leaves, std::uint64_t seed) {
    auto start = Clock::now();
    Checker check = make_checker("tree-dp-consistency");

    auto compare_all = [&](const Graph& g, bool is_caterpillar) {
        std::int64_t ept_exact = ept_sum_exact(g).value;
        std::int64_t vpt_exact = vpt_sum_exact(g).value;
        SolveResult bs_ept = bounded_spine_solver(g, MeasureKind::EptSum);
        SolveResult bs_vpt = bounded_spine_solver(g, MeasureKind::VptSum);
        check.expect(bs_ept.value == ept_exact && bs_vpt.value == vpt_exact, [&] {
            return "bounded-spine mismatch on " + describe_graph(g);
        });
        check.expect(validate(g, bs_ept.witness).valid &&
                         value(g, bs_ept.witness, MeasureKind::EptSum) == bs_ept.value &&
                         validate(g, bs_vpt.witness).valid &&
                         value(g, bs_vpt.witness, MeasureKind::VptSum) == bs_vpt.value,
                     [&] { return "bounded-spine witness invalid on " + describe_graph(g); });
        if (!is_caterpillar) return;
        SolveResult cat_dc = caterpillar_dc(g);
        SolveResult cat_vpt = caterpillar_vpt_sum(g);
        check.expect(cat_dc.value == ept_exact && cat_vpt.value == vpt_exact, [&] {
            return "caterpillar DP mismatch on " + describe_graph(g);
        });
        check.expect(validate(g, cat_dc.witness).valid &&
                         value(g, cat_dc.witness, MeasureKind::Dc) == cat_dc.value &&
                         validate(g, cat_vpt.witness).valid &&
                         value(g, cat_vpt.witness, MeasureKind::VptSum) == cat_vpt.value,
                     [&] { return "caterpillar DP witness invalid on " + describe_graph(g); });
    };

    for (int n = 1; n <= max_cat_n && check.result.passed; ++n) {
        std::vector<int> parts;
        compositions(n, parts, [&] {
            if (check.result.passed) compare_all(caterpillar(parts), true);
        });
    }
    TestRng rng(seed);
    for (int i = 0; i < random_count && check.result.passed; ++i) {
        int n = 5 + static_cast<int>(rng.below(random_max_n - 4));
        Graph g = random_low_spine_tree(n, max_spine_leaves, seed ^ (0x2545f491u + i));
        compare_all(g, g.classify().is_caterpillar);
    }
    return check.finish(start);
}

CheckResult check_caterpillar_scaling() {
    auto start = Clock::now();
    Checker check = make_checker("caterpillar-cubic-scaling");
    auto time_point_for = [&](int n) {
        // a path read as n unit stars maximizes the spine length, so the
        // cubic DP term dominates the fixed per-call overhead already at
        // n = 100
        Graph g = caterpillar(std::vector<int>(n, 1));
        double best = 1e18;
        for (int rep = 0; rep < 11; ++rep) {
            auto t0 = Clock::now();
            SolveResult r = caterpillar_dc(g);
            double dt = std::chrono::duration<double>(Clock::now() - t0).count();
            if (r.value <= 0) throw std::logic_error("scaling probe returned nonsense");
            best = std::min(best, dt);
        }
        return best;
    };
    double t100 = time_point_for(100);
    double t200 = time_point_for(200);
    double t400 = time_point_for(400);
    double r1 = t200 / t100, r2 = t400 / t200;
    std::ostringstream detail;
    detail << "doubling factors " << r1 << ", " << r2;
    check.expect(r1 >= 4.0 && r1 <= 12.0 && r2 >= 4.0 && r2 <= 12.0,
                 [&] { return "scaling outside 8 +/- 50%: " + detail.str(); });
    if (check.result.passed) check.result.detail = detail.str();
    return check.finish(start);
}

CheckResult check_auto_dispatch(std::uint64_t seed) {
    auto start = Clock::now();
    Checker check = make_checker("auto-dispatch");
    std::vector<Graph> corpus;
    corpus.push_back(star(6));
    corpus.push_back(path(9));
    corpus.push_back(caterpillar({3, 1, 4}));
    corpus.push_back(broomstick(3));
    TestRng rng(seed);
    for (int i = 0; i < 6; ++i)
        corpus.push_back(random_tree(4 + static_cast<int>(rng.below(8)), seed ^ (17u + i)));
    for (int i = 0; i < 6; ++i) {
        int n = 3 + static_cast<int>(rng.below(5));
        std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
        int m = n - 1 + static_cast<int>(rng.below(max_m - (n - 1) + 1));
        corpus.push_back(random_connected_graph(n, m, seed ^ (91u + i)));
    }
    for (const Graph& g : corpus) {
        for (MeasureKind m :
             {MeasureKind::VptSum, MeasureKind::VptMax, MeasureKind::EptSum,
              MeasureKind::EptMax, MeasureKind::Dc}) {
            SolveResult via_auto = solve_with(g, m, Algorithm::Auto);
            SolveResult via_exact = solve_with(g, m, Algorithm::Exact);
            check.expect(via_auto.value == via_exact.value, [&] {
                return "auto(" + measure_name(m) + ") != exact on " + describe_graph(g);
            });
        }
    }
    return check.finish(start);
}

std::vector<CheckResult> run_verification(VerifyLevel level, std::ostream* progress) {
    std::vector<CheckResult> results;
    auto run = [&](CheckResult r) {
        if (progress)
            (*progress) << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.cases
                        << " cases, " << r.seconds << "s)"
                        << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
        results.push_back(std::move(r));
    };

    if (level == VerifyLevel::Quick) {
        run(check_oracle_equivalence(7, 7, 7, 1));
        run(check_closed_forms(20, 4));
        run(check_rotation_identity(200, 0xc0ffee));
        run(check_auto_dispatch(0xc0ffee));
        return results;
    }
    run(check_oracle_equivalence(9, 7, 8, 50));
    run(check_thm3_identity(6, 200, 7, 0xc0ffee));
    run(check_closed_forms(50, 5));
    run(check_rotation_identity(1000, 0xc0ffee));
    run(check_optimal_clusterings_viable(8));
    run(check_edge_removal_inequalities(9));
    run(check_two_approximation(9, 500, 60, 0xc0ffee, SolveOptions{}));
    run(check_broomstick({3, 4, 5}));
    run(check_tp_bridge(6));
    run(check_dp_consistency(12, 100, 40, 4, 0xc0ffee));
    run(check_auto_dispatch(0xc0ffee));
    return results;
}

}  // namespace partree
