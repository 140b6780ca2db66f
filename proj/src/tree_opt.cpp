#include "partree/tree_opt.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <unordered_map>

#include "masks.hpp"
#include "partree/decomp_tree.hpp"

namespace partree {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t star_dc(std::int64_t s) { return s * (s + 1) / 2 - 1; }

// clustering subtree for a star cluster, peeling leaves in increasing id
// order; `leaves` must be sorted and exclude the center
int build_star_clustering(DecompTree& tree, int parent, VertexId center,
                          const std::vector<VertexId>& leaves, std::size_t from = 0) {
    if (from == leaves.size()) {
        return parent < 0 ? tree.add_root(LabelKind::Vertex, center)
                          : tree.add_child(parent, LabelKind::Vertex, center);
    }
    int node = parent < 0 ? tree.add_root(LabelKind::Internal, -1)
                          : tree.add_child(parent, LabelKind::Internal, -1);
    tree.add_child(node, LabelKind::Vertex, leaves[from]);
    build_star_clustering(tree, node, center, leaves, from + 1);
    return node;
}

void require_tree(const Graph& g, const char* who) {
    if (!g.classify().is_tree)
        throw std::invalid_argument(std::string(who) + ": input is not a tree");
}

}  // namespace

CaterpillarDecomp caterpillar_decompose(const Graph& g) {
    Classification c = g.classify();
    if (!c.is_caterpillar)
        throw std::invalid_argument("caterpillar_decompose: input is not a caterpillar");

    CaterpillarDecomp out;
    VertexSet spine_set;
    for (VertexId v : g.vertices())
        if (g.degree(v) >= 2) spine_set.push_back(v);

    if (spine_set.empty()) {
        out.spine.push_back(g.vertices().front());  // K_1 or K_2
    } else if (spine_set.size() == 1) {
        out.spine = spine_set;
    } else {
        Graph spine = g.induced(spine_set);
        VertexId start = -1;
        for (VertexId v : spine.vertices()) {
            if (spine.degree(v) <= 1) {
                start = v;
                break;
            }
        }
        VertexId prev = -1, cur = start;
        while (true) {
            out.spine.push_back(cur);
            VertexId next = -1;
            for (auto [w, e] : spine.incident(cur))
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
    }

    for (std::size_t i = 0; i < out.spine.size(); ++i) out.star_of[out.spine[i]] = static_cast<int>(i);
    out.star_sizes.assign(out.spine.size(), 1);
    for (VertexId v : g.vertices()) {
        if (out.star_of.count(v)) continue;
        VertexId support = g.incident(v).front().first;
        int star = out.star_of.at(support);
        out.star_of[v] = star;
        ++out.star_sizes[star];
    }
    return out;
}

namespace {

struct CaterpillarTables {
    CaterpillarDecomp decomp;
    std::vector<std::vector<VertexId>> pendants;  // sorted leaves per star
    std::vector<std::int64_t> prefix;             // prefix[i] = sum of sizes < i

    explicit CaterpillarTables(const Graph& g) : decomp(caterpillar_decompose(g)) {
        int p = static_cast<int>(decomp.spine.size());
        pendants.assign(p, {});
        for (VertexId v : g.vertices()) {
            int star = decomp.star_of.at(v);
            if (decomp.spine[star] != v) pendants[star].push_back(v);
        }
        for (auto& list : pendants) std::sort(list.begin(), list.end());
        prefix.assign(p + 1, 0);
        for (int i = 0; i < p; ++i) prefix[i + 1] = prefix[i] + decomp.star_sizes[i];
    }

    std::int64_t total(int i, int j) const { return prefix[j + 1] - prefix[i]; }
};

}  // namespace

SolveResult caterpillar_dc(const Graph& g) {
    auto start = Clock::now();
    CaterpillarTables tab(g);
    int p = static_cast<int>(tab.decomp.spine.size());

    std::vector<std::vector<std::int64_t>> dc(p, std::vector<std::int64_t>(p, 0));
    std::vector<std::vector<int>> split(p, std::vector<int>(p, -1));
    for (int i = 0; i < p; ++i) dc[i][i] = star_dc(tab.decomp.star_sizes[i]);
    for (int len = 2; len <= p; ++len) {
        for (int i = 0; i + len - 1 < p; ++i) {
            int j = i + len - 1;
            std::int64_t best = kInf;
            int best_k = -1;
            for (int k = i; k < j; ++k) {
                std::int64_t cand = dc[i][k] + dc[k + 1][j];
                if (cand < best) {
                    best = cand;
                    best_k = k;
                }
            }
            dc[i][j] = tab.total(i, j) + best;
            split[i][j] = best_k;
        }
    }

    SolveResult result;
    result.measure = MeasureKind::Dc;
    result.algorithm = "caterpillar";
    result.value = dc[0][p - 1];
    result.witness = DecompTree(TreeKind::Clustering);
    std::function<void(int, int, int)> build = [&](int i, int j, int parent) {
        if (i == j) {
            build_star_clustering(result.witness, parent, tab.decomp.spine[i], tab.pendants[i]);
            return;
        }
        int node = parent < 0 ? result.witness.add_root(LabelKind::Internal, -1)
                              : result.witness.add_child(parent, LabelKind::Internal, -1);
        int k = split[i][j];
        build(i, k, node);
        build(k + 1, j, node);
    };
    build(0, p - 1, -1);
    result.witness = canonicalize(result.witness);
    result.stats.subproblems = static_cast<std::int64_t>(p) * (p + 1) / 2;
    result.stats.elapsed_seconds = seconds_since(start);
    return result;
}

SolveResult caterpillar_vpt_sum(const Graph& g) {
    auto start = Clock::now();
    CaterpillarTables tab(g);
    int p = static_cast<int>(tab.decomp.spine.size());

    // vpt[i][j] over star intervals; removing root x_k leaves the two
    // sub-intervals plus the pendants of X_k as singletons
    auto cell = [&](std::vector<std::vector<std::int64_t>>& m, int i, int j) -> std::int64_t& {
        return m[i][j];
    };
    std::vector<std::vector<std::int64_t>> vpt(p, std::vector<std::int64_t>(p, 0));
    std::vector<std::vector<int>> root(p, std::vector<int>(p, -1));
    auto get = [&](int i, int j) { return i > j ? std::int64_t{0} : cell(vpt, i, j); };
    for (int len = 1; len <= p; ++len) {
        for (int i = 0; i + len - 1 < p; ++i) {
            int j = i + len - 1;
            std::int64_t best = kInf;
            int best_k = -1;
            for (int k = i; k <= j; ++k) {
                std::int64_t cand =
                    get(i, k - 1) + get(k + 1, j) + (tab.decomp.star_sizes[k] - 1);
                if (cand < best) {
                    best = cand;
                    best_k = k;
                }
            }
            vpt[i][j] = tab.total(i, j) + best;
            root[i][j] = best_k;
        }
    }

    SolveResult result;
    result.measure = MeasureKind::VptSum;
    result.algorithm = "caterpillar";
    result.value = vpt[0][p - 1];
    result.witness = DecompTree(TreeKind::Vpt);
    std::function<void(int, int, int)> build = [&](int i, int j, int parent) {
        int k = root[i][j];
        int node = parent < 0 ? result.witness.add_root(LabelKind::Vertex, tab.decomp.spine[k])
                              : result.witness.add_child(parent, LabelKind::Vertex,
                                                         tab.decomp.spine[k]);
        if (i <= k - 1) build(i, k - 1, node);
        if (k + 1 <= j) build(k + 1, j, node);
        for (VertexId leaf : tab.pendants[k]) result.witness.add_child(node, LabelKind::Vertex, leaf);
    };
    build(0, p - 1, -1);
    result.witness = canonicalize(result.witness);
    result.stats.subproblems = static_cast<std::int64_t>(p) * (p + 1) / 2;
    result.stats.elapsed_seconds = seconds_since(start);
    return result;
}

namespace {

template <class Mask>
struct BoundedSpineSolver {
    const detail::SubsetContext<Mask>& ctx;
    std::int64_t budget;
    Mask spine;                       // dense indices of internal vertices of g
    std::vector<int> internal_edges;  // edge ids with both endpoints internal

    struct Entry {
        std::int64_t value;
        int choice;  // edge id (EPT) or dense vertex index (VPT); -1 for star cells
    };
    std::unordered_map<Mask, Entry, detail::MaskHash<Mask>> memo;

    BoundedSpineSolver(const detail::SubsetContext<Mask>& c, std::int64_t b) : ctx(c), budget(b) {
        spine = ctx.empty_mask();
        for (int i = 0; i < ctx.n; ++i)
            if ((ctx.adj[i] & ctx.full).count() >= 2) spine.set(i);
        for (int e = 0; e < static_cast<int>(ctx.edge_idx.size()); ++e) {
            auto [iu, iv] = ctx.edge_idx[e];
            if (spine.test(iu) && spine.test(iv)) internal_edges.push_back(e);
        }
    }

    // center of a star cluster: its unique internal vertex, else smallest id
    int star_center(const Mask& sub) const {
        int center = -1;
        sub.for_each([&](int i) {
            if (center < 0 && (ctx.adj[i] & sub).count() >= 2) center = i;
        });
        return center >= 0 ? center : sub.lowest();
    }

    bool is_star(const Mask& sub) const {
        int internal = 0;
        sub.for_each([&](int i) {
            if ((ctx.adj[i] & sub).count() >= 2) ++internal;
        });
        return internal <= 1;
    }

    void charge() {
        if (static_cast<std::int64_t>(memo.size()) >= budget) throw BudgetExceeded(budget);
    }

    std::int64_t solve_ept(const Mask& sub) {
        auto it = memo.find(sub);
        if (it != memo.end()) return it->second.value;
        Entry entry{kInf, -1};
        if (is_star(sub)) {
            entry.value = star_dc(sub.count());
        } else {
            // by the leaves-last property the optimal cut is an internal edge
            for (int e : internal_edges) {
                auto [iu, iv] = ctx.edge_idx[e];
                if (!sub.test(iu) || !sub.test(iv)) continue;
                std::int64_t acc = sub.count();
                for (const Mask& comp : ctx.components(sub, e)) acc += solve_ept(comp);
                if (acc < entry.value) entry = {acc, e};
            }
        }
        charge();
        memo.emplace(sub, entry);
        return entry.value;
    }

    std::int64_t solve_vpt(const Mask& sub) {
        if (sub.count() == 1) return 1;
        auto it = memo.find(sub);
        if (it != memo.end()) return it->second.value;
        Entry entry{kInf, -1};
        Mask candidates = spine & sub;
        if (candidates.none()) candidates.set(sub.lowest());  // K_2 input
        candidates.for_each([&](int v) {
            std::int64_t acc = sub.count();
            for (const Mask& comp : ctx.components(sub.without(v))) acc += solve_vpt(comp);
            if (acc < entry.value) entry = {acc, v};
        });
        charge();
        memo.emplace(sub, entry);
        return entry.value;
    }

    void build_ept(const Mask& sub, DecompTree& tree, int parent) {
        const Entry& entry = memo.at(sub);
        if (entry.choice < 0) {
            int center = star_center(sub);
            std::vector<VertexId> leaves;
            sub.for_each([&](int i) {
                if (i != center) leaves.push_back(ctx.g->vertex_at(i));
            });
            std::sort(leaves.begin(), leaves.end());
            build_star_clustering(tree, parent, ctx.g->vertex_at(center), leaves);
            return;
        }
        int node = parent < 0 ? tree.add_root(LabelKind::Internal, -1)
                              : tree.add_child(parent, LabelKind::Internal, -1);
        for (const Mask& comp : ctx.components(sub, entry.choice)) build_ept(comp, tree, node);
    }

    void build_vpt(const Mask& sub, DecompTree& tree, int parent) {
        if (sub.count() == 1) {
            VertexId v = ctx.g->vertex_at(sub.lowest());
            if (parent < 0)
                tree.add_root(LabelKind::Vertex, v);
            else
                tree.add_child(parent, LabelKind::Vertex, v);
            return;
        }
        const Entry& entry = memo.at(sub);
        VertexId v = ctx.g->vertex_at(entry.choice);
        int node = parent < 0 ? tree.add_root(LabelKind::Vertex, v)
                              : tree.add_child(parent, LabelKind::Vertex, v);
        for (const Mask& comp : ctx.components(sub.without(entry.choice)))
            build_vpt(comp, tree, node);
    }
};

template <class Mask>
SolveResult bounded_spine_impl(const Graph& g, MeasureKind measure, const SolveOptions& opts) {
    auto start = Clock::now();
    detail::SubsetContext<Mask> ctx(g);
    BoundedSpineSolver<Mask> solver(ctx, opts.subset_budget);

    SolveResult result;
    result.measure = measure;
    result.algorithm = "bounded-spine";
    if (measure == MeasureKind::EptSum) {
        result.value = solver.solve_ept(ctx.full);
        DecompTree clustering(TreeKind::Clustering);
        solver.build_ept(ctx.full, clustering, -1);
        result.witness = clustering_to_ept(g, clustering);
    } else {
        result.value = solver.solve_vpt(ctx.full);
        result.witness = DecompTree(TreeKind::Vpt);
        solver.build_vpt(ctx.full, result.witness, -1);
        result.witness = canonicalize(result.witness);
    }
    result.stats.subproblems = static_cast<std::int64_t>(solver.memo.size());
    result.stats.elapsed_seconds = seconds_since(start);
    return result;
}

}  // namespace

SolveResult bounded_spine_solver(const Graph& g, MeasureKind measure, const SolveOptions& opts) {
    require_tree(g, "bounded_spine_solver");
    if (measure != MeasureKind::EptSum && measure != MeasureKind::VptSum)
        throw std::invalid_argument("bounded_spine_solver: measure must be ept-sum or vpt-sum");
    if (g.n() <= 64) return bounded_spine_impl<detail::Mask64>(g, measure, opts);
    return bounded_spine_impl<detail::MaskWide>(g, measure, opts);
}

namespace {

template <class Mask>
struct BalancedBuilder {
    const detail::SubsetContext<Mask>& ctx;
    DecompTree tree{TreeKind::Clustering};
    std::int64_t total = 0;
    std::int64_t internal_nodes = 0;

    // balanced edge of the cluster, ties broken by smallest edge id
    int balanced_edge(const Mask& sub) const {
        std::vector<int> order, parent_of(ctx.n, -1), size_of(ctx.n, 1);
        order.reserve(sub.count());
        int root = sub.lowest();
        Mask seen = ctx.empty_mask();
        seen.set(root);
        order.push_back(root);
        for (std::size_t head = 0; head < order.size(); ++head) {
            int i = order[head];
            (ctx.adj[i] & sub).for_each([&](int j) {
                if (!seen.test(j)) {
                    seen.set(j);
                    parent_of[j] = i;
                    order.push_back(j);
                }
            });
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            if (parent_of[*it] >= 0) size_of[parent_of[*it]] += size_of[*it];

        int total_size = sub.count();
        int best_edge = -1, best = total_size + 1;
        for (int e = 0; e < static_cast<int>(ctx.edge_idx.size()); ++e) {
            auto [iu, iv] = ctx.edge_idx[e];
            if (!sub.test(iu) || !sub.test(iv)) continue;
            int child = parent_of[iv] == iu ? iv : iu;
            int largest = std::max(size_of[child], total_size - size_of[child]);
            if (largest < best) {
                best = largest;
                best_edge = e;
            }
        }
        return best_edge;
    }

    int build(const Mask& sub, int parent) {
        if (sub.count() == 1) {
            VertexId v = ctx.g->vertex_at(sub.lowest());
            return parent < 0 ? tree.add_root(LabelKind::Vertex, v)
                              : tree.add_child(parent, LabelKind::Vertex, v);
        }
        int e = balanced_edge(sub);
        total += sub.count();  // single-edge cut: m * n = n
        ++internal_nodes;
        int node = parent < 0 ? tree.add_root(LabelKind::Internal, -1)
                              : tree.add_child(parent, LabelKind::Internal, -1);
        for (const Mask& comp : ctx.components(sub, e)) build(comp, node);
        return node;
    }
};

template <class Mask>
SolveResult balanced_impl(const Graph& g) {
    auto start = Clock::now();
    detail::SubsetContext<Mask> ctx(g);
    BalancedBuilder<Mask> builder{ctx};
    builder.build(ctx.full, -1);

    SolveResult result;
    result.measure = MeasureKind::Dc;
    result.algorithm = "balanced";
    result.value = builder.total;
    result.witness = canonicalize(builder.tree);
    result.stats.subproblems = builder.internal_nodes;
    result.stats.elapsed_seconds = seconds_since(start);
    return result;
}

}  // namespace

SolveResult balanced_clustering(const Graph& g) {
    require_tree(g, "balanced_clustering");
    if (g.n() <= 64) return balanced_impl<detail::Mask64>(g);
    return balanced_impl<detail::MaskWide>(g);
}

SolveResult local_search_rotations(const Graph& g, const DecompTree& start) {
    auto t0 = Clock::now();
    Diagnosis d = validate(g, start);
    if (start.kind != TreeKind::Clustering || !d.valid)
        throw std::invalid_argument("local_search_rotations: input is not a valid clustering tree");

    DecompTree current = start;
    std::int64_t rotations = 0;
    bool improved = true;
    while (improved) {
        improved = false;
        for (int x = 0; x < current.size() && !improved; ++x) {
            if (current.nodes[x].children.size() != 2) continue;
            for (RotationDirection dir : {RotationDirection::Left, RotationDirection::Right}) {
                int inner = dir == RotationDirection::Left ? current.nodes[x].children[1]
                                                           : current.nodes[x].children[0];
                if (current.nodes[inner].children.size() != 2) continue;
                if (rotation_delta(g, current, x, dir) > 0) {
                    current = rotate(current, x, dir);
                    ++rotations;
                    improved = true;
                    break;
                }
            }
        }
    }

    SolveResult result;
    result.measure = MeasureKind::Dc;
    result.algorithm = "local-search";
    result.witness = canonicalize(current);
    result.value = value(g, result.witness, MeasureKind::Dc);
    result.stats.subproblems = rotations;
    result.stats.elapsed_seconds = seconds_since(t0);
    return result;
}

}  // namespace partree
