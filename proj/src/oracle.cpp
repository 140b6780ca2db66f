#include "partree/oracle.hpp"

#include <algorithm>
#include <limits>

#include "masks.hpp"
#include "partree/trivially_perfect.hpp"

namespace partree {

namespace {

using detail::Mask64;
using Ctx = detail::SubsetContext<Mask64>;

void check_cap(const Graph& g, const OracleOptions& opts, const char* who) {
    if (g.n() > opts.max_n)
        throw std::invalid_argument(std::string(who) + ": instance exceeds the oracle cap of " +
                                    std::to_string(opts.max_n) + " vertices");
}

// Shared backtracking builder: enumerators attach and detach nodes on one
// arena and fire the visitor at every complete assembly.
struct EnumBuilder {
    const Ctx& ctx;
    DecompTree tree;

    EnumBuilder(const Ctx& c, TreeKind kind) : ctx(c), tree(kind) {}

    int attach(int parent, LabelKind lk, int id) {
        if (parent < 0) return tree.add_root(lk, id);
        return tree.add_child(parent, lk, id);
    }
    void detach(int node, int parent) {
        if (parent < 0)
            tree.roots.pop_back();
        else
            tree.nodes[parent].children.pop_back();
        tree.nodes.pop_back();
        (void)node;
    }
};

struct VptEnum : EnumBuilder {
    const TreeVisitor& visit;

    VptEnum(const Ctx& c, const TreeVisitor& v) : EnumBuilder(c, TreeKind::Vpt), visit(v) {}

    void component(const Mask64& comp, int parent, const std::function<void()>& next) {
        comp.for_each([&](int i) {
            int node = attach(parent, LabelKind::Vertex, ctx.g->vertex_at(i));
            auto children = ctx.components(comp.without(i));
            chain(children, 0, node, next);
            detach(node, parent);
        });
    }
    void chain(const std::vector<Mask64>& comps, std::size_t at, int parent,
               const std::function<void()>& next) {
        if (at == comps.size()) {
            next();
            return;
        }
        component(comps[at], parent, [&] { chain(comps, at + 1, parent, next); });
    }
};

struct EptEnum : EnumBuilder {
    const TreeVisitor& visit;
    using State = std::pair<Mask64, std::uint64_t>;  // vertices, present edges

    EptEnum(const Ctx& c, const TreeVisitor& v) : EnumBuilder(c, TreeKind::Ept), visit(v) {}

    // non-bridge removals keep the vertex set and drop an edge, so the
    // enumeration state is the remaining subgraph
    void component(const State& state, int parent, const std::function<void()>& next) {
        const auto& [comp, present] = state;
        if (comp.count() == 1) {
            int node = attach(parent, LabelKind::Vertex, ctx.g->vertex_at(comp.lowest()));
            next();
            detach(node, parent);
            return;
        }
        std::uint64_t rest = present;
        while (rest) {
            int e = __builtin_ctzll(rest);
            rest &= rest - 1;
            int node = attach(parent, LabelKind::Edge, e);
            auto children = ctx.subgraph_components(comp, present & ~(1ull << e));
            chain(children, 0, node, next);
            detach(node, parent);
        }
    }
    void chain(const std::vector<State>& comps, std::size_t at, int parent,
               const std::function<void()>& next) {
        if (at == comps.size()) {
            next();
            return;
        }
        component(comps[at], parent, [&] { chain(comps, at + 1, parent, next); });
    }
};

struct ClusterEnum : EnumBuilder {
    const TreeVisitor& visit;

    ClusterEnum(const Ctx& c, const TreeVisitor& v)
        : EnumBuilder(c, TreeKind::Clustering), visit(v) {}

    void cluster(const Mask64& sub, int parent, const std::function<void()>& next) {
        if (sub.count() == 1) {
            int node = attach(parent, LabelKind::Vertex, ctx.g->vertex_at(sub.lowest()));
            next();
            detach(node, parent);
            return;
        }
        auto comps = ctx.components(sub);
        if (comps.size() > 1) {
            // disconnected clusters split along empty cuts; the componentwise
            // chain is the canonical zero-cost shape
            Mask64 rest = sub.minus(comps[0]);
            int node = attach(parent, LabelKind::Internal, -1);
            cluster(comps[0], node, [&] { cluster(rest, node, next); });
            detach(node, parent);
            return;
        }
        int pin = sub.lowest();
        std::uint64_t free = sub.without(pin).bits;
        // all bipartitions with the lowest vertex pinned to the first side
        for (std::uint64_t lo = free;; lo = (lo - 1) & free) {
            if (lo != free) {
                Mask64 a{lo | (1ull << pin)};
                Mask64 b = sub.minus(a);
                int node = attach(parent, LabelKind::Internal, -1);
                cluster(a, node, [&] { cluster(b, node, next); });
                detach(node, parent);
            }
            if (lo == 0) break;
        }
    }
};

}  // namespace

void enumerate_vpts(const Graph& g, const TreeVisitor& visit, const OracleOptions& opts) {
    check_cap(g, opts, "enumerate_vpts");
    if (g.n() == 0) return;
    Ctx ctx(g);
    VptEnum en(ctx, visit);
    auto comps = ctx.components(ctx.full);
    en.chain(comps, 0, -1, [&] { visit(en.tree); });
}

void enumerate_epts(const Graph& g, const TreeVisitor& visit, const OracleOptions& opts) {
    check_cap(g, opts, "enumerate_epts");
    if (g.n() == 0) return;
    if (g.m() > 60) throw std::invalid_argument("enumerate_epts: too many edges");
    Ctx ctx(g);
    EptEnum en(ctx, visit);
    std::uint64_t all_edges = (1ull << g.m()) - 1;
    auto comps = ctx.subgraph_components(ctx.full, all_edges);
    en.chain(comps, 0, -1, [&] { visit(en.tree); });
}

namespace {

void enumerate_clusterings(const Graph& g, const TreeVisitor& visit, const OracleOptions& opts) {
    check_cap(g, opts, "enumerate_clusterings");
    if (g.n() == 0) return;
    Ctx ctx(g);
    ClusterEnum en(ctx, visit);
    en.cluster(ctx.full, -1, [&] { visit(en.tree); });
}

}  // namespace

std::vector<DecompTree> all_vpts(const Graph& g, const OracleOptions& opts) {
    std::vector<DecompTree> out;
    enumerate_vpts(g, [&](const DecompTree& t) { out.push_back(t); }, opts);
    return out;
}

std::vector<DecompTree> all_epts(const Graph& g, const OracleOptions& opts) {
    std::vector<DecompTree> out;
    enumerate_epts(g, [&](const DecompTree& t) { out.push_back(t); }, opts);
    return out;
}

std::int64_t brute_min(const Graph& g, MeasureKind measure, const OracleOptions& opts) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    auto fold = [&](const DecompTree& t) {
        MeasureKind m = measure == MeasureKind::Dc ? MeasureKind::Dc : measure;
        best = std::min(best, value(g, t, m));
    };
    switch (measure) {
        case MeasureKind::VptSum:
        case MeasureKind::VptMax:
            enumerate_vpts(g, fold, opts);
            break;
        case MeasureKind::EptSum:
        case MeasureKind::EptMax:
            enumerate_epts(g, fold, opts);
            break;
        case MeasureKind::Dc:
            enumerate_clusterings(g, fold, opts);
            break;
    }
    if (g.n() == 0) return 0;
    return best;
}

std::vector<DecompTree> brute_optimal_clusterings(const Graph& g, const OracleOptions& opts) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<DecompTree> argmin;
    enumerate_clusterings(
        g,
        [&](const DecompTree& t) {
            std::int64_t v = value(g, t, MeasureKind::Dc);
            if (v < best) {
                best = v;
                argmin.clear();
            }
            if (v == best) argmin.push_back(canonicalize(t));
        },
        opts);
    return argmin;
}

int brute_tp_completion(const Graph& g, const OracleOptions& opts) {
    check_cap(g, opts, "brute_tp_completion");
    std::vector<std::pair<VertexId, VertexId>> non_edges;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.edge_id(vs[i], vs[j])) non_edges.emplace_back(vs[i], vs[j]);

    int total = static_cast<int>(non_edges.size());
    for (int k = 0; k <= total; ++k) {
        // k-subsets of the non-edges in lexicographic order
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            auto edges = g.edges();
            for (int i : pick) edges.push_back(non_edges[i]);
            if (recognize_tp(Graph(g.vertices(), edges)).is_tp) return k;
            int pos = k - 1;
            while (pos >= 0 && pick[pos] == total - k + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
        }
    }
    throw std::logic_error("brute_tp_completion: no completion found");  // unreachable
}

}  // namespace partree
