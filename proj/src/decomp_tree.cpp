#include "partree/decomp_tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace partree {

namespace {

std::string label_text(const TreeNode& node) {
    switch (node.label_kind) {
        case LabelKind::Vertex:
            return "vertex(" + std::to_string(node.label_id) + ")";
        case LabelKind::Edge:
            return "edge(" + std::to_string(node.label_id) + ")";
        case LabelKind::Internal:
            return "internal";
    }
    return "?";
}

}  // namespace

std::string measure_name(MeasureKind m) {
    switch (m) {
        case MeasureKind::VptSum: return "vpt-sum";
        case MeasureKind::VptMax: return "vpt-max";
        case MeasureKind::EptSum: return "ept-sum";
        case MeasureKind::EptMax: return "ept-max";
        case MeasureKind::Dc: return "dc";
    }
    return "?";
}

int DecompTree::add_root(LabelKind lk, int id) {
    nodes.push_back(TreeNode{lk, id, -1, {}});
    roots.push_back(size() - 1);
    return size() - 1;
}

int DecompTree::add_child(int parent, LabelKind lk, int id) {
    nodes.push_back(TreeNode{lk, id, parent, {}});
    nodes[parent].children.push_back(size() - 1);
    return size() - 1;
}

int DecompTree::edge_depth(int x) const {
    int d = 0;
    while (nodes[x].parent >= 0) {
        x = nodes[x].parent;
        ++d;
    }
    return d;
}

VertexSet DecompTree::leaf_vertices(int x) const {
    VertexSet out;
    std::deque<int> stack{x};
    while (!stack.empty()) {
        int y = stack.back();
        stack.pop_back();
        if (is_leaf(y)) {
            if (nodes[y].label_kind == LabelKind::Vertex) out.push_back(nodes[y].label_id);
        } else {
            for (int c : nodes[y].children) stack.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet DecompTree::subtree_vertices(int x) const {
    VertexSet out;
    std::deque<int> stack{x};
    while (!stack.empty()) {
        int y = stack.back();
        stack.pop_back();
        if (nodes[y].label_kind == LabelKind::Vertex) out.push_back(nodes[y].label_id);
        for (int c : nodes[y].children) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Components of g restricted to `within`, optionally treating edges in
// `blocked` as absent. Sorted sets ordered by smallest member.
std::vector<VertexSet> restricted_components(const Graph& g, const VertexSet& within,
                                             const std::unordered_set<EdgeId>* blocked) {
    std::unordered_set<VertexId> in(within.begin(), within.end());
    std::unordered_set<VertexId> seen;
    std::vector<VertexSet> comps;
    for (VertexId s : within) {
        if (seen.count(s)) continue;
        VertexSet comp;
        std::deque<VertexId> queue{s};
        seen.insert(s);
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (auto [w, e] : g.incident(u)) {
                if (!in.count(w) || seen.count(w)) continue;
                if (blocked && blocked->count(e)) continue;
                seen.insert(w);
                queue.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return comps;
}

bool restricted_connected(const Graph& g, const VertexSet& within,
                          const std::unordered_set<EdgeId>* blocked) {
    if (within.size() <= 1) return true;
    return restricted_components(g, within, blocked).size() == 1;
}

struct Validator {
    const Graph& g;
    const DecompTree& t;
    Diagnosis diag;

    void fail(int node, std::string rule, std::string message) {
        diag.valid = false;
        diag.violations.push_back({node, std::move(rule), std::move(message)});
    }

    bool structure_ok() {
        int nn = t.size();
        std::vector<int> indegree(nn, 0);
        for (int i = 0; i < nn; ++i) {
            for (int c : t.nodes[i].children) {
                if (c < 0 || c >= nn) {
                    fail(i, "structure", "child index out of range");
                    return false;
                }
                if (t.nodes[c].parent != i) {
                    fail(c, "structure", "parent/child link mismatch");
                    return false;
                }
                ++indegree[c];
            }
        }
        for (int r : t.roots) {
            if (r < 0 || r >= nn || t.nodes[r].parent != -1) {
                fail(r, "structure", "root has a parent or is out of range");
                return false;
            }
        }
        int reached = 0;
        std::deque<int> stack(t.roots.begin(), t.roots.end());
        std::vector<bool> seen(nn, false);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (seen[x]) {
                fail(x, "structure", "node reachable twice");
                return false;
            }
            seen[x] = true;
            ++reached;
            for (int c : t.nodes[x].children) stack.push_back(c);
        }
        if (reached != nn) {
            fail(-1, "structure", "nodes not reachable from the roots");
            return false;
        }
        for (int i = 0; i < nn; ++i) {
            if (indegree[i] > 1) {
                fail(i, "structure", "node has several parents");
                return false;
            }
        }
        return true;
    }

    bool vertex_bijection(const std::vector<int>& node_list, const char* rule) {
        VertexSet labels;
        for (int x : node_list) {
            if (t.nodes[x].label_kind != LabelKind::Vertex) {
                fail(x, rule, "expected a vertex label, got " + label_text(t.nodes[x]));
                return false;
            }
            labels.push_back(t.nodes[x].label_id);
        }
        std::sort(labels.begin(), labels.end());
        if (labels != g.vertices()) {
            fail(-1, rule, "vertex labels are not a bijection with V(G)");
            return false;
        }
        return true;
    }

    // children clusters must equal the components exactly
    bool match_components(int node, const std::vector<VertexSet>& comps,
                          const std::vector<VertexSet>& child_sets, const char* rule) {
        if (comps.size() != child_sets.size()) {
            fail(node, rule,
                 "expected " + std::to_string(comps.size()) + " children, found " +
                     std::to_string(child_sets.size()));
            return false;
        }
        auto sorted = child_sets;
        std::sort(sorted.begin(), sorted.end(),
                  [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
        if (sorted != comps) {
            fail(node, rule, "child clusters do not match the components");
            return false;
        }
        return true;
    }

    void check_vpt(int x, const VertexSet& expected) {
        VertexSet sub = t.subtree_vertices(x);
        if (sub != expected) {
            fail(x, "vpt-cluster", "subtree vertex set does not match its component");
            return;
        }
        VertexId v = t.nodes[x].label_id;
        std::vector<VertexSet> child_sets;
        for (int c : t.nodes[x].children) child_sets.push_back(t.subtree_vertices(c));
        VertexSet rest;
        for (VertexId u : expected)
            if (u != v) rest.push_back(u);
        auto comps = restricted_components(g, rest, nullptr);
        if (!match_components(x, comps, child_sets, "vpt-recursion")) return;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            int c = -1;
            for (int cand : t.nodes[x].children) {
                if (t.subtree_vertices(cand) == comps[i]) {
                    c = cand;
                    break;
                }
            }
            if (c >= 0) check_vpt(c, comps[i]);
        }
    }

    // `removed` accumulates the edges deleted along the path from the root;
    // a non-bridge removal keeps the vertex set of the cluster but the
    // subgraph below must not use the edge again
    void check_ept(int x, const VertexSet& expected, std::unordered_set<EdgeId>& removed) {
        if (t.is_leaf(x)) {
            if (expected.size() != 1 || t.nodes[x].label_kind != LabelKind::Vertex ||
                t.nodes[x].label_id != expected.front())
                fail(x, "ept-leaf", "leaf does not match its single-vertex component");
            return;
        }
        if (t.nodes[x].label_kind != LabelKind::Edge) {
            fail(x, "ept-internal", "internal node must carry an edge label");
            return;
        }
        int k = static_cast<int>(t.nodes[x].children.size());
        if (k < 1 || k > 2) {
            fail(x, "ept-arity", "internal node must have 1 or 2 children");
            return;
        }
        EdgeId e = t.nodes[x].label_id;
        if (e < 0 || e >= g.m() || removed.count(e)) {
            fail(x, "ept-edge", "unknown or already removed edge id");
            return;
        }
        auto [u, v] = g.edge(e);
        if (!std::binary_search(expected.begin(), expected.end(), u) ||
            !std::binary_search(expected.begin(), expected.end(), v)) {
            fail(x, "ept-edge", "edge endpoints are outside the cluster");
            return;
        }
        removed.insert(e);
        auto comps = restricted_components(g, expected, &removed);
        std::vector<VertexSet> child_sets;
        for (int c : t.nodes[x].children) child_sets.push_back(t.leaf_vertices(c));
        if (match_components(x, comps, child_sets, "ept-recursion")) {
            for (std::size_t i = 0; i < comps.size(); ++i) {
                for (int cand : t.nodes[x].children) {
                    if (t.leaf_vertices(cand) == comps[i]) {
                        check_ept(cand, comps[i], removed);
                        break;
                    }
                }
            }
        }
        removed.erase(e);
    }

    void run() {
        if (!structure_ok()) return;

        if (t.kind == TreeKind::Vpt) {
            std::vector<int> all(t.size());
            for (int i = 0; i < t.size(); ++i) all[i] = i;
            if (!vertex_bijection(all, "vpt-labels")) return;
        } else {
            std::vector<int> leaves;
            for (int i = 0; i < t.size(); ++i)
                if (t.is_leaf(i)) leaves.push_back(i);
            if (!vertex_bijection(leaves, "leaf-labels")) return;
        }

        if (t.kind == TreeKind::Ept) {
            std::vector<EdgeId> edge_labels;
            for (int i = 0; i < t.size(); ++i) {
                if (t.is_leaf(i)) continue;
                if (t.nodes[i].label_kind != LabelKind::Edge) {
                    fail(i, "ept-internal", "internal node must carry an edge label");
                    return;
                }
                edge_labels.push_back(t.nodes[i].label_id);
            }
            std::sort(edge_labels.begin(), edge_labels.end());
            std::vector<EdgeId> expected(g.m());
            for (int e = 0; e < g.m(); ++e) expected[e] = e;
            if (edge_labels != expected) {
                fail(-1, "ept-labels", "edge labels are not a bijection with E(G)");
                return;
            }
        }

        if (t.kind == TreeKind::Clustering) {
            for (int i = 0; i < t.size(); ++i) {
                if (t.is_leaf(i)) continue;
                if (t.nodes[i].children.size() != 2) {
                    fail(i, "clustering-arity", "internal node must have exactly 2 children");
                    return;
                }
                if (t.nodes[i].label_kind != LabelKind::Internal) {
                    fail(i, "clustering-label", "internal node must be unlabeled");
                    return;
                }
            }
        }

        // roots vs components of g
        auto comps = g.connected_components();
        std::vector<VertexSet> root_sets;
        for (int r : t.roots)
            root_sets.push_back(t.kind == TreeKind::Vpt ? t.subtree_vertices(r)
                                                        : t.leaf_vertices(r));
        if (t.kind == TreeKind::Clustering) {
            // a clustering forest may group several components under one root,
            // but no edge may cross between roots
            VertexSet all;
            for (const auto& s : root_sets) all.insert(all.end(), s.begin(), s.end());
            std::sort(all.begin(), all.end());
            if (all != g.vertices()) {
                fail(-1, "clustering-roots", "root clusters do not partition V(G)");
                return;
            }
            if (t.roots.size() > 1) {
                std::unordered_map<VertexId, int> root_of;
                for (std::size_t i = 0; i < root_sets.size(); ++i)
                    for (VertexId v : root_sets[i]) root_of[v] = static_cast<int>(i);
                for (const auto& [u, v] : g.edges()) {
                    if (root_of[u] != root_of[v]) {
                        fail(-1, "clustering-roots", "edge crosses between forest roots");
                        return;
                    }
                }
            }
            return;  // partition condition below each node is structural
        }

        if (!match_components(-1, comps, root_sets,
                              t.kind == TreeKind::Vpt ? "vpt-roots" : "ept-roots"))
            return;
        for (const auto& comp : comps) {
            for (int r : t.roots) {
                VertexSet s =
                    t.kind == TreeKind::Vpt ? t.subtree_vertices(r) : t.leaf_vertices(r);
                if (s == comp) {
                    if (t.kind == TreeKind::Vpt) {
                        check_vpt(r, comp);
                    } else {
                        std::unordered_set<EdgeId> removed;
                        check_ept(r, comp, removed);
                    }
                    break;
                }
            }
        }
    }
};

}  // namespace

Diagnosis validate(const Graph& g, const DecompTree& t) {
    Validator v{g, t, {}};
    v.run();
    return v.diag;
}

bool is_viable(const Graph& g, const DecompTree& t) {
    if (t.kind != TreeKind::Clustering)
        throw std::invalid_argument("is_viable: expected a clustering tree");
    Diagnosis d = validate(g, t);
    if (!d.valid)
        throw std::invalid_argument("is_viable: tree is not a valid clustering tree (" +
                                    (d.violations.empty() ? std::string("?")
                                                          : d.violations.front().message) +
                                    ")");
    for (int x = 0; x < t.size(); ++x) {
        if (t.is_leaf(x)) continue;
        VertexSet cluster = t.leaf_vertices(x);
        VertexSet a = t.leaf_vertices(t.nodes[x].children[0]);
        std::unordered_set<VertexId> in_a(a.begin(), a.end());
        std::unordered_set<VertexId> in_cluster(cluster.begin(), cluster.end());
        std::unordered_set<EdgeId> cut;
        for (int e = 0; e < g.m(); ++e) {
            auto [u, v] = g.edge(e);
            if (!in_cluster.count(u) || !in_cluster.count(v)) continue;
            if (in_a.count(u) != in_a.count(v)) cut.insert(e);
        }
        if (cut.empty()) continue;  // empty cut of a disconnected cluster is minimal
        // a nonempty cut is inclusion-minimal iff the cluster is connected and
        // putting back any single cut edge reconnects it
        if (!restricted_connected(g, cluster, nullptr)) return false;
        for (EdgeId e : cut) {
            std::unordered_set<EdgeId> blocked = cut;
            blocked.erase(e);
            if (!restricted_connected(g, cluster, &blocked)) return false;
        }
    }
    return true;
}

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

// quick structural sanity used by value(); full recursive validity is the
// caller's responsibility
void check_value_preconditions(const Graph& g, const DecompTree& t, MeasureKind measure) {
    TreeKind want = TreeKind::Vpt;
    if (measure == MeasureKind::EptSum || measure == MeasureKind::EptMax) want = TreeKind::Ept;
    if (measure == MeasureKind::Dc) want = TreeKind::Clustering;
    require(t.kind == want, "value: measure is not compatible with the tree kind");

    VertexSet labels;
    for (int i = 0; i < t.size(); ++i) {
        const TreeNode& node = t.nodes[i];
        if (t.kind == TreeKind::Vpt || t.is_leaf(i)) {
            require(node.label_kind == LabelKind::Vertex, "value: missing vertex label");
            labels.push_back(node.label_id);
        }
    }
    std::sort(labels.begin(), labels.end());
    require(labels == g.vertices(), "value: tree labels are not a bijection with V(G)");
}

}  // namespace

std::int64_t value(const Graph& g, const DecompTree& t, MeasureKind measure) {
    check_value_preconditions(g, t, measure);

    std::vector<int> depth(t.size(), 0);
    std::deque<int> order(t.roots.begin(), t.roots.end());
    for (std::size_t head = 0; head < order.size(); ++head) {
        int x = order[head];
        for (int c : t.nodes[x].children) {
            depth[c] = depth[x] + 1;
            order.push_back(c);
        }
    }
    require(order.size() == static_cast<std::size_t>(t.size()), "value: malformed tree");

    switch (measure) {
        case MeasureKind::VptSum: {
            std::int64_t sum = 0;
            for (int x = 0; x < t.size(); ++x) sum += depth[x] + 1;
            return sum;
        }
        case MeasureKind::VptMax: {
            std::int64_t best = 0;
            for (int x = 0; x < t.size(); ++x)
                best = std::max<std::int64_t>(best, depth[x] + 1);
            return best;
        }
        case MeasureKind::EptSum: {
            std::int64_t sum = 0;
            for (int x = 0; x < t.size(); ++x)
                if (t.is_leaf(x)) sum += depth[x];
            return sum;
        }
        case MeasureKind::EptMax: {
            std::int64_t best = 0;
            for (int x = 0; x < t.size(); ++x)
                if (t.is_leaf(x)) best = std::max<std::int64_t>(best, depth[x]);
            return best;
        }
        case MeasureKind::Dc: {
            // every edge uv is cut exactly at the lowest common ancestor of
            // its leaves, contributing n(cluster at that node)
            std::unordered_map<VertexId, int> leaf_of;
            for (int x = 0; x < t.size(); ++x)
                if (t.is_leaf(x)) leaf_of[t.nodes[x].label_id] = x;
            std::vector<std::int64_t> leaf_count(t.size(), 0);
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                int x = *it;
                if (t.is_leaf(x)) leaf_count[x] = 1;
                if (t.nodes[x].parent >= 0) leaf_count[t.nodes[x].parent] += leaf_count[x];
            }
            std::int64_t total = 0;
            for (const auto& [u, v] : g.edges()) {
                int a = leaf_of.at(u), b = leaf_of.at(v);
                while (depth[a] > depth[b]) a = t.nodes[a].parent;
                while (depth[b] > depth[a]) b = t.nodes[b].parent;
                while (a != b) {
                    a = t.nodes[a].parent;
                    b = t.nodes[b].parent;
                    require(a >= 0 && b >= 0, "value: edge crosses between forest roots");
                }
                total += leaf_count[a];
            }
            return total;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

struct RotationShape {
    int sibling;  // a: stays one level below
    int inner;    // the internal child that changes level
    int near;     // inner child that gets paired with the sibling
    int far;      // inner child that moves up
};

RotationShape rotation_shape(const DecompTree& t, int node, RotationDirection dir) {
    if (t.kind != TreeKind::Clustering)
        throw std::invalid_argument("rotation: expected a clustering tree");
    if (node < 0 || node >= t.size() || t.nodes[node].children.size() != 2)
        throw std::invalid_argument("rotation: node is not internal binary");
    int first = t.nodes[node].children[0];
    int second = t.nodes[node].children[1];
    int inner = dir == RotationDirection::Left ? second : first;
    int sibling = dir == RotationDirection::Left ? first : second;
    if (t.nodes[inner].children.size() != 2)
        throw std::invalid_argument("rotation: inner child is not internal");
    // the sibling pairs with the inner child closest to it
    int near = dir == RotationDirection::Left ? t.nodes[inner].children[0]
                                              : t.nodes[inner].children[1];
    int far = dir == RotationDirection::Left ? t.nodes[inner].children[1]
                                             : t.nodes[inner].children[0];
    return {sibling, inner, near, far};
}

std::int64_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    std::unordered_set<VertexId> in_a(a.begin(), a.end()), in_b(b.begin(), b.end());
    std::int64_t count = 0;
    for (const auto& [u, v] : g.edges()) {
        if ((in_a.count(u) && in_b.count(v)) || (in_a.count(v) && in_b.count(u))) ++count;
    }
    return count;
}

}  // namespace

std::int64_t rotation_delta(const Graph& g, const DecompTree& t, int node,
                            RotationDirection dir) {
    RotationShape s = rotation_shape(t, node, dir);
    VertexSet a = t.leaf_vertices(s.sibling);
    VertexSet b = t.leaf_vertices(s.near);
    VertexSet c = t.leaf_vertices(s.far);
    return static_cast<std::int64_t>(c.size()) * edges_between(g, a, b) -
           static_cast<std::int64_t>(a.size()) * edges_between(g, b, c);
}

DecompTree rotate(const DecompTree& t, int node, RotationDirection dir) {
    RotationShape s = rotation_shape(t, node, dir);
    DecompTree out = t;
    if (dir == RotationDirection::Left) {
        // (a,(b,c)) -> ((a,b),c): reuse the inner node as the new low pair
        out.nodes[node].children = {s.inner, s.far};
        out.nodes[s.inner].children = {s.sibling, s.near};
    } else {
        // ((a,b),c) -> (a,(b,c)) with inner=(a,b): far=a rises
        out.nodes[node].children = {s.far, s.inner};
        out.nodes[s.inner].children = {s.near, s.sibling};
    }
    out.nodes[s.sibling].parent = s.inner;
    out.nodes[s.near].parent = s.inner;
    out.nodes[s.far].parent = node;
    return out;
}

DecompTree ept_to_clustering(const Graph& g, const DecompTree& t) {
    Diagnosis d = validate(g, t);
    if (t.kind != TreeKind::Ept || !d.valid)
        throw std::invalid_argument("ept_to_clustering: input is not a valid EPT");
    DecompTree out(TreeKind::Clustering);

    // contract unary edge nodes; binary edge nodes become unlabeled splits
    std::function<int(int, int)> conv = [&](int x, int parent) -> int {
        if (t.is_leaf(x)) {
            if (parent < 0)
                return out.add_root(LabelKind::Vertex, t.nodes[x].label_id);
            return out.add_child(parent, LabelKind::Vertex, t.nodes[x].label_id);
        }
        if (t.nodes[x].children.size() == 1) return conv(t.nodes[x].children[0], parent);
        int y = parent < 0 ? out.add_root(LabelKind::Internal, -1)
                           : out.add_child(parent, LabelKind::Internal, -1);
        for (int c : t.nodes[x].children) conv(c, y);
        return y;
    };
    for (int r : t.roots) conv(r, -1);
    return out;
}

DecompTree clustering_to_ept(const Graph& g, const DecompTree& t) {
    if (!is_viable(g, t))
        throw std::invalid_argument(
            "clustering_to_ept: cut is not minimal, not realizable as an edge sequence");
    DecompTree out(TreeKind::Ept);

    // returns the ids of the EPT roots covering x's cluster (several when the
    // cut at x is empty)
    std::function<std::vector<int>(int)> conv = [&](int x) -> std::vector<int> {
        if (t.is_leaf(x)) {
            out.nodes.push_back(TreeNode{LabelKind::Vertex, t.nodes[x].label_id, -1, {}});
            return {out.size() - 1};
        }
        VertexSet a = t.leaf_vertices(t.nodes[x].children[0]);
        VertexSet b = t.leaf_vertices(t.nodes[x].children[1]);
        std::unordered_set<VertexId> in_a(a.begin(), a.end()), in_b(b.begin(), b.end());
        std::vector<EdgeId> cut;
        for (int e = 0; e < g.m(); ++e) {
            auto [u, v] = g.edge(e);
            if ((in_a.count(u) && in_b.count(v)) || (in_a.count(v) && in_b.count(u)))
                cut.push_back(e);
        }
        auto left = conv(t.nodes[x].children[0]);
        auto right = conv(t.nodes[x].children[1]);
        std::vector<int> below;
        below.insert(below.end(), left.begin(), left.end());
        below.insert(below.end(), right.begin(), right.end());
        if (cut.empty()) return below;
        // minimality keeps the cluster connected until the last cut edge, so
        // a chain in increasing edge-id order is a valid EPT fragment
        int top = -1, prev = -1;
        for (EdgeId e : cut) {
            out.nodes.push_back(TreeNode{LabelKind::Edge, e, prev, {}});
            int cur = out.size() - 1;
            if (prev >= 0) out.nodes[prev].children.push_back(cur);
            if (top < 0) top = cur;
            prev = cur;
        }
        for (int child : below) {
            out.nodes[child].parent = prev;
            out.nodes[prev].children.push_back(child);
        }
        return {top};
    };
    for (int r : t.roots) {
        for (int nr : conv(r)) out.roots.push_back(nr);
    }
    return canonicalize(out);
}

namespace {

void canonical_copy(const DecompTree& src, int x, int parent, DecompTree& dst,
                    const std::vector<VertexId>& key) {
    int y = parent < 0 ? dst.add_root(src.nodes[x].label_kind, src.nodes[x].label_id)
                       : dst.add_child(parent, src.nodes[x].label_kind, src.nodes[x].label_id);
    auto children = src.nodes[x].children;
    std::sort(children.begin(), children.end(),
              [&](int a, int b) { return key[a] < key[b]; });
    for (int c : children) canonical_copy(src, c, y, dst, key);
}

}  // namespace

DecompTree canonicalize(const DecompTree& t) {
    // key = smallest vertex id carried in the subtree
    std::vector<VertexId> key(t.size(), std::numeric_limits<VertexId>::max());
    std::vector<int> order;
    order.reserve(t.size());
    std::deque<int> stack(t.roots.begin(), t.roots.end());
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int c : t.nodes[x].children) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        if (t.nodes[x].label_kind == LabelKind::Vertex) key[x] = t.nodes[x].label_id;
        for (int c : t.nodes[x].children) key[x] = std::min(key[x], key[c]);
    }
    DecompTree out(t.kind);
    out.nodes.reserve(t.size());
    auto roots = t.roots;
    std::sort(roots.begin(), roots.end(), [&](int a, int b) { return key[a] < key[b]; });
    for (int r : roots) canonical_copy(t, r, -1, out, key);
    return out;
}

bool structurally_equal(const DecompTree& a, const DecompTree& b) {
    if (a.kind != b.kind) return false;
    DecompTree ca = canonicalize(a), cb = canonicalize(b);
    if (ca.size() != cb.size() || ca.roots != cb.roots) return false;
    for (int i = 0; i < ca.size(); ++i) {
        if (ca.nodes[i].label_kind != cb.nodes[i].label_kind ||
            ca.nodes[i].label_id != cb.nodes[i].label_id ||
            ca.nodes[i].children != cb.nodes[i].children)
            return false;
    }
    return true;
}

}  // namespace partree
