#include "partree/trivially_perfect.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "partree/exact.hpp"

namespace partree {

namespace {

bool adjacent(const Graph& g, VertexId u, VertexId v) { return g.edge_id(u, v).has_value(); }

// induced P_4 (in path order) or C_4 (in cycle order) among the given
// vertices, if any
bool find_obstruction(const Graph& g, const VertexSet& within, VertexSet& out, bool& is_cycle) {
    std::size_t n = within.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    std::array<VertexId, 4> q{within[a], within[b], within[c], within[d]};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (adjacent(g, q[i], q[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2) {
                        // 2-regular on 4 vertices is a C_4; order it
                        out = {q[0]};
                        VertexId prev = q[0];
                        while (out.size() < 4) {
                            for (VertexId w : q) {
                                if (w == prev || std::count(out.begin(), out.end(), w)) continue;
                                if (adjacent(g, prev, w)) {
                                    out.push_back(w);
                                    prev = w;
                                    break;
                                }
                            }
                        }
                        is_cycle = true;
                        return true;
                    }
                    if (edges == 3) {
                        int ones = 0, twos = 0;
                        for (int i = 0; i < 4; ++i) {
                            if (deg[i] == 1) ++ones;
                            if (deg[i] == 2) ++twos;
                        }
                        if (ones == 2 && twos == 2) {
                            // a P_4; order from one endpoint
                            VertexId end = -1;
                            for (int i = 0; i < 4; ++i)
                                if (deg[i] == 1) end = q[i];
                            out = {end};
                            VertexId prev = end;
                            while (out.size() < 4) {
                                for (VertexId w : q) {
                                    if (std::count(out.begin(), out.end(), w)) continue;
                                    if (adjacent(g, prev, w)) {
                                        out.push_back(w);
                                        prev = w;
                                        break;
                                    }
                                }
                            }
                            is_cycle = false;
                            return true;
                        }
                    }
                }
    return false;
}

// peel universal vertices; returns false and fills the witness obstruction on
// failure
bool peel(const Graph& g, const VertexSet& comp, DecompTree& tree, int parent, TPWitness& w) {
    if (comp.size() == 1) {
        if (parent < 0)
            tree.add_root(LabelKind::Vertex, comp.front());
        else
            tree.add_child(parent, LabelKind::Vertex, comp.front());
        return true;
    }
    std::unordered_set<VertexId> in(comp.begin(), comp.end());
    VertexId universal = -1;
    for (VertexId v : comp) {
        std::size_t within = 0;
        for (auto [u, e] : g.incident(v))
            if (in.count(u)) ++within;
        if (within == comp.size() - 1) {
            universal = v;
            break;  // comp is sorted, so this is the smallest universal vertex
        }
    }
    if (universal < 0) {
        bool found = find_obstruction(g, comp, w.obstruction, w.obstruction_is_cycle);
        if (!found)
            throw std::logic_error(
                "recognize_tp: connected component without universal vertex or obstruction");
        return false;
    }
    int node = parent < 0 ? tree.add_root(LabelKind::Vertex, universal)
                          : tree.add_child(parent, LabelKind::Vertex, universal);
    VertexSet rest;
    for (VertexId v : comp)
        if (v != universal) rest.push_back(v);
    Graph sub = g.induced(rest);
    for (const auto& child_comp : sub.connected_components()) {
        if (!peel(g, child_comp, tree, node, w)) return false;
    }
    return true;
}

}  // namespace

TPWitness recognize_tp(const Graph& g) {
    TPWitness w;
    w.generating_tree = DecompTree(TreeKind::Vpt);
    for (const auto& comp : g.connected_components()) {
        if (!peel(g, comp, w.generating_tree, -1, w)) {
            w.is_tp = false;
            w.generating_tree = DecompTree(TreeKind::Vpt);
            return w;
        }
    }
    w.is_tp = true;
    return w;
}

std::int64_t tp_sum_identity(const Graph& g, const SolveOptions& opts) {
    if (!recognize_tp(g).is_tp)
        throw std::invalid_argument("tp_sum_identity: graph is not trivially perfect");
    std::int64_t expected = g.n() + g.m();
    std::int64_t solved = vpt_sum_exact(g, opts).value;
    if (solved != expected)
        throw std::logic_error("tp_sum_identity: VPT-sum of a TP graph is not n + m");
    return expected;
}

TPCompletion min_tp_completion(const Graph& g, const SolveOptions& opts) {
    SolveResult r = vpt_sum_exact(g, opts);
    std::int64_t k = r.value - g.n() - g.m();
    if (k < 0) throw std::logic_error("min_tp_completion: VPT-sum below n + m");

    // the completion is the ancestor-descendant closure of the optimal VPT
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<VertexId, VertexId>> edges = g.edges();
    auto key = [](VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    };
    for (const auto& [u, v] : edges) seen.insert(key(u, v));
    std::vector<std::pair<VertexId, VertexId>> added;
    const DecompTree& t = r.witness;
    for (int x = 0; x < t.size(); ++x) {
        VertexId v = t.nodes[x].label_id;
        for (int a = t.nodes[x].parent; a >= 0; a = t.nodes[a].parent) {
            VertexId u = t.nodes[a].label_id;
            if (seen.insert(key(u, v)).second)
                added.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::sort(added.begin(), added.end());
    edges.insert(edges.end(), added.begin(), added.end());

    TPCompletion out{k, Graph(g.vertices(), edges)};
    if (out.completed.m() != g.m() + k)
        throw std::logic_error("min_tp_completion: closure size does not match k");
    if (!recognize_tp(out.completed).is_tp)
        throw std::logic_error("min_tp_completion: completed graph is not trivially perfect");
    return out;
}

}  // namespace partree
