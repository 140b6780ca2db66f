#include "partree/exact.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <unordered_map>

#include "masks.hpp"

namespace partree {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

template <class Mask>
struct ExactSolver {
    const detail::SubsetContext<Mask>& ctx;
    MeasureKind measure;
    std::int64_t budget;

    struct Entry {
        std::int64_t value;
        int choice;  // dense vertex index or edge id; -1 at single-vertex bases
    };
    std::unordered_map<Mask, Entry, detail::MaskHash<Mask>> memo;

    bool vertex_based() const {
        return measure == MeasureKind::VptSum || measure == MeasureKind::VptMax;
    }
    bool summing() const {
        return measure == MeasureKind::VptSum || measure == MeasureKind::EptSum;
    }

    std::int64_t combine(const Mask& sub, int blocked_edge, int skipped_vertex) {
        Mask seed = sub;
        if (skipped_vertex >= 0) seed = sub.without(skipped_vertex);
        std::int64_t acc = 0;
        for (const Mask& comp : ctx.components(seed, blocked_edge)) {
            std::int64_t v = solve(comp);
            acc = summing() ? acc + v : std::max(acc, v);
        }
        return acc;
    }

    std::int64_t solve(const Mask& sub) {
        auto it = memo.find(sub);
        if (it != memo.end()) return it->second.value;

        Entry entry{kInf, -1};
        int size = sub.count();
        if (size == 1 && !vertex_based()) {
            entry = {0, -1};
        } else if (vertex_based()) {
            // min over root vertices, smallest id first so ties are stable
            sub.for_each([&](int i) {
                std::int64_t acc = combine(sub, -1, i);
                std::int64_t cand = summing() ? size + acc : 1 + acc;
                if (cand < entry.value) entry = {cand, i};
            });
        } else {
            for (int e = 0; e < static_cast<int>(ctx.edge_idx.size()); ++e) {
                auto [iu, iv] = ctx.edge_idx[e];
                if (!sub.test(iu) || !sub.test(iv)) continue;
                std::int64_t acc = combine(sub, e, -1);
                std::int64_t cand = summing() ? size + acc : 1 + acc;
                if (cand < entry.value) entry = {cand, e};
            }
        }

        if (static_cast<std::int64_t>(memo.size()) >= budget) throw BudgetExceeded(budget);
        memo.emplace(sub, entry);
        return entry.value;
    }

    void build_witness(const Mask& sub, DecompTree& tree, int parent) {
        const Entry& entry = memo.at(sub);
        if (vertex_based()) {
            VertexId v = ctx.g->vertex_at(entry.choice);
            int node = parent < 0 ? tree.add_root(LabelKind::Vertex, v)
                                  : tree.add_child(parent, LabelKind::Vertex, v);
            for (const Mask& comp : ctx.components(sub.without(entry.choice)))
                build_witness(comp, tree, node);
        } else if (sub.count() == 1) {
            VertexId v = ctx.g->vertex_at(sub.lowest());
            if (parent < 0)
                tree.add_root(LabelKind::Vertex, v);
            else
                tree.add_child(parent, LabelKind::Vertex, v);
        } else {
            int node = parent < 0 ? tree.add_root(LabelKind::Edge, entry.choice)
                                  : tree.add_child(parent, LabelKind::Edge, entry.choice);
            for (const Mask& comp : ctx.components(sub, entry.choice))
                build_witness(comp, tree, node);
        }
    }
};

// EPT recursion on graphs with cycles: removing a non-bridge edge keeps the
// vertex set and shrinks the edge set, so the state is the whole subgraph
// (vertex mask, present-edge mask), not an induced vertex subset.
struct EptSubgraphSolver {
    const detail::SubsetContext<detail::Mask64>& ctx;
    bool summing;
    std::int64_t budget;

    struct Key {
        std::uint64_t vertices;
        std::uint64_t edges;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            detail::Mask64 a{k.vertices}, b{k.edges * 0x9e3779b97f4a7c15ull + 1};
            return a.hash() ^ (b.hash() << 1);
        }
    };
    struct Entry {
        std::int64_t value;
        int choice;
    };
    std::unordered_map<Key, Entry, KeyHash> memo;

    std::int64_t solve(const detail::Mask64& sub, std::uint64_t present) {
        if (sub.count() == 1) return 0;
        Key key{sub.bits, present};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second.value;

        Entry entry{kInf, -1};
        int size = sub.count();
        std::uint64_t rest = present;
        while (rest) {
            int e = __builtin_ctzll(rest);
            rest &= rest - 1;
            std::int64_t acc = 0;
            for (const auto& [comp, comp_edges] :
                 ctx.subgraph_components(sub, present & ~(1ull << e))) {
                std::int64_t v = solve(comp, comp_edges);
                acc = summing ? acc + v : std::max(acc, v);
            }
            std::int64_t cand = summing ? size + acc : 1 + acc;
            if (cand < entry.value) entry = {cand, e};
        }
        if (static_cast<std::int64_t>(memo.size()) >= budget) throw BudgetExceeded(budget);
        memo.emplace(key, entry);
        return entry.value;
    }

    void build_witness(const detail::Mask64& sub, std::uint64_t present, DecompTree& tree,
                       int parent) {
        if (sub.count() == 1) {
            VertexId v = ctx.g->vertex_at(sub.lowest());
            if (parent < 0)
                tree.add_root(LabelKind::Vertex, v);
            else
                tree.add_child(parent, LabelKind::Vertex, v);
            return;
        }
        const Entry& entry = memo.at(Key{sub.bits, present});
        int node = parent < 0 ? tree.add_root(LabelKind::Edge, entry.choice)
                              : tree.add_child(parent, LabelKind::Edge, entry.choice);
        for (const auto& [comp, comp_edges] :
             ctx.subgraph_components(sub, present & ~(1ull << entry.choice)))
            build_witness(comp, comp_edges, tree, node);
    }
};

SolveResult solve_ept_subgraph(const Graph& g, MeasureKind measure, const SolveOptions& opts) {
    if (g.n() > 64 || g.m() > 64)
        throw std::invalid_argument(
            "exact EPT solver: inputs with cycles are supported up to 64 vertices/edges");
    auto start = Clock::now();
    detail::SubsetContext<detail::Mask64> ctx(g);
    EptSubgraphSolver solver{ctx, measure == MeasureKind::EptSum, opts.subset_budget, {}};

    std::uint64_t all_edges = g.m() == 64 ? ~0ull : (1ull << g.m()) - 1;
    std::int64_t total = 0;
    auto comps = ctx.subgraph_components(ctx.full, all_edges);
    for (const auto& [comp, comp_edges] : comps) {
        std::int64_t v = solver.solve(comp, comp_edges);
        total = measure == MeasureKind::EptSum ? total + v : std::max(total, v);
    }

    SolveResult result;
    result.measure = measure;
    result.algorithm = "exact";
    result.value = total;
    result.witness = DecompTree(TreeKind::Ept);
    for (const auto& [comp, comp_edges] : comps)
        solver.build_witness(comp, comp_edges, result.witness, -1);
    result.witness = canonicalize(result.witness);
    result.stats.subproblems = static_cast<std::int64_t>(solver.memo.size());
    result.stats.elapsed_seconds = seconds_since(start);
    return result;
}

template <class Mask>
SolveResult solve_exact_impl(const Graph& g, MeasureKind measure, const SolveOptions& opts) {
    auto start = Clock::now();
    detail::SubsetContext<Mask> ctx(g);
    ExactSolver<Mask> solver{ctx, measure, opts.subset_budget, {}};

    bool summing = measure == MeasureKind::VptSum || measure == MeasureKind::EptSum;
    std::int64_t total = 0;
    auto comps = ctx.components(ctx.full);
    for (const Mask& comp : comps) {
        std::int64_t v = solver.solve(comp);
        total = summing ? total + v : std::max(total, v);
    }

    SolveResult result;
    result.measure = measure;
    result.algorithm = "exact";
    result.value = total;
    result.witness = DecompTree(
        (measure == MeasureKind::VptSum || measure == MeasureKind::VptMax) ? TreeKind::Vpt
                                                                           : TreeKind::Ept);
    for (const Mask& comp : comps) solver.build_witness(comp, result.witness, -1);
    result.witness = canonicalize(result.witness);
    result.stats.subproblems = static_cast<std::int64_t>(solver.memo.size());
    result.stats.elapsed_seconds = seconds_since(start);
    return result;
}

SolveResult solve_exact(const Graph& g, MeasureKind measure, const SolveOptions& opts) {
    bool edge_based = measure == MeasureKind::EptSum || measure == MeasureKind::EptMax;
    bool forest =
        g.m() + static_cast<int>(g.connected_components().size()) == g.n();
    if (edge_based && !forest) return solve_ept_subgraph(g, measure, opts);
    if (g.n() <= 64) return solve_exact_impl<detail::Mask64>(g, measure, opts);
    return solve_exact_impl<detail::MaskWide>(g, measure, opts);
}

struct DcReference {
    const detail::SubsetContext<detail::Mask64>& ctx;
    std::int64_t budget;
    std::int64_t steps = 0;
    std::unordered_map<detail::Mask64, std::int64_t, detail::MaskHash<detail::Mask64>> memo;

    void charge() {
        if (++steps > budget) throw BudgetExceeded(budget);
    }

    std::int64_t dc(const detail::Mask64& sub) {
        int size = sub.count();
        if (size <= 1) return 0;
        auto comps = ctx.components(sub);
        if (comps.size() > 1) {
            // disconnected clusters split along empty cuts at zero cost
            std::int64_t total = 0;
            for (const auto& comp : comps) total += dc(comp);
            return total;
        }
        auto it = memo.find(sub);
        if (it != memo.end()) return it->second;

        int pin = sub.lowest();
        std::uint64_t rest = sub.without(pin).bits;
        std::int64_t best = kInf;
        // all bipartitions (A,B) with the lowest vertex pinned to A
        for (std::uint64_t lo = rest;; lo = (lo - 1) & rest) {
            if (lo != rest) {  // A == sub is not a split
                charge();
                detail::Mask64 a{lo | (1ull << pin)};
                detail::Mask64 b = sub.minus(a);
                std::int64_t cut = 0;
                a.for_each([&](int i) { cut += (ctx.adj[i] & b).count(); });
                best = std::min(best, cut * size + dc(a) + dc(b));
            }
            if (lo == 0) break;
        }
        charge();
        memo.emplace(sub, best);
        return best;
    }
};

}  // namespace

SolveResult vpt_sum_exact(const Graph& g, const SolveOptions& opts) {
    return solve_exact(g, MeasureKind::VptSum, opts);
}

SolveResult vpt_max_exact(const Graph& g, const SolveOptions& opts) {
    return solve_exact(g, MeasureKind::VptMax, opts);
}

SolveResult ept_sum_exact(const Graph& g, const SolveOptions& opts) {
    return solve_exact(g, MeasureKind::EptSum, opts);
}

SolveResult ept_max_exact(const Graph& g, const SolveOptions& opts) {
    return solve_exact(g, MeasureKind::EptMax, opts);
}

std::int64_t dc_partition_reference(const Graph& g, std::int64_t budget) {
    std::int64_t total = 0;
    std::int64_t left = budget;
    for (const auto& comp : g.connected_components()) {
        if (comp.size() > 64)
            throw std::invalid_argument("dc_partition_reference: component too large");
        Graph sub = g.induced(comp);
        detail::SubsetContext<detail::Mask64> ctx(sub);
        DcReference ref{ctx, left, 0, {}};
        total += ref.dc(ctx.full);
        left -= ref.steps;
    }
    return total;
}

}  // namespace partree
