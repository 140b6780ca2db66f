#include "partree/corpus.hpp"

#include <algorithm>
#include <random>

#include "partree/families.hpp"
#include "prufer.hpp"

namespace partree {

void for_each_labeled_tree(int n, const GraphVisitor& visit) {
    if (n < 1) throw std::invalid_argument("for_each_labeled_tree: n must be >= 1");
    if (n == 1) {
        visit(Graph(1, {}));
        return;
    }
    if (n == 2) {
        visit(Graph(2, {{0, 1}}));
        return;
    }
    std::vector<int> code(n - 2, 0);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> degree;
    while (true) {
        detail::prufer_decode_into(code, n, edges, degree);
        visit(Graph(n, edges));
        int pos = n - 3;
        while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
        if (pos < 0) break;
        ++code[pos];
    }
}

void for_each_graph(int n, bool connected_only, const GraphVisitor& visit) {
    if (n < 1) throw std::invalid_argument("for_each_graph: n must be >= 1");
    if (n > 8) throw std::invalid_argument("for_each_graph: n too large for exhaustion");
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if ((mask >> p) & 1) edges.push_back(pairs[p]);
        Graph g(n, edges);
        if (connected_only && g.connected_components().size() != 1) continue;
        visit(g);
    }
}

namespace {

std::string ahu(const Graph& g, VertexId v, VertexId parent) {
    std::vector<std::string> parts;
    for (auto [w, e] : g.incident(v))
        if (w != parent) parts.push_back(ahu(g, w, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

}  // namespace

std::string canonical_tree_form(const Graph& tree) {
    int n = tree.n();
    if (n == 0) return "[]";
    // peel leaves to find the 1- or 2-vertex center
    std::vector<int> degree(n), layer;
    std::vector<bool> removed(n, false);
    for (int i = 0; i < n; ++i) degree[i] = tree.degree(tree.vertex_at(i));
    int remaining = n;
    for (int i = 0; i < n; ++i)
        if (degree[i] <= 1) layer.push_back(i);
    while (remaining > 2) {
        std::vector<int> next;
        for (int i : layer) {
            removed[i] = true;
            --remaining;
            for (auto [w, e] : tree.incident(tree.vertex_at(i))) {
                int j = tree.index_of(w);
                if (!removed[j] && --degree[j] == 1) next.push_back(j);
            }
        }
        layer = std::move(next);
    }
    std::vector<VertexId> centers;
    for (int i = 0; i < n; ++i)
        if (!removed[i]) centers.push_back(tree.vertex_at(i));
    if (centers.size() == 1) return "[" + ahu(tree, centers[0], -1) + "]";
    std::string a = ahu(tree, centers[0], centers[1]);
    std::string b = ahu(tree, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return "[" + a + "|" + b + "]";
}

std::string canonical_graph_form(const Graph& g) {
    int n = g.n();
    if (n > 8) throw std::invalid_argument("canonical_graph_form: n too large");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::string best;
    do {
        std::string enc;
        enc.reserve(n * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                enc += g.edge_id(g.vertex_at(perm[i]), g.vertex_at(perm[j])) ? '1' : '0';
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

Graph random_low_spine_tree(int n, int max_spine_leaves, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_low_spine_tree: n must be >= 1");
    if (max_spine_leaves < 2)
        throw std::invalid_argument("random_low_spine_tree: need max_spine_leaves >= 2");
    if (n < 4) return path(n);

    std::mt19937_64 engine(seed);
    auto below = [&](std::uint64_t bound) { return engine() % bound; };  // test corpus only

    // spine skeleton: a path (2 spine leaves) or a spider with l arms; every
    // skeleton leaf then receives a pendant so it stays internal
    int l = 2 + static_cast<int>(below(max_spine_leaves - 1));
    int min_s = l == 2 ? 2 : l + 1;
    if (n - l < min_s) l = 2, min_s = 2;
    // keep the pendant count moderate so the exact solvers stay in budget on
    // the same instances
    int max_pendants = std::min(n - min_s, 12);
    int pendants = std::max(l, 1 + static_cast<int>(below(max_pendants)));
    int s = n - pendants;

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> skeleton_leaves;
    if (l == 2) {
        for (int i = 0; i + 1 < s; ++i) edges.emplace_back(i, i + 1);
        skeleton_leaves = {0, s - 1};
    } else {
        // center 0 with l arms of total length s-1
        std::vector<int> arm(l, 1);
        for (int extra = s - 1 - l; extra > 0; --extra) ++arm[below(l)];
        int next = 1;
        for (int a = 0; a < l; ++a) {
            int prev = 0;
            for (int step = 0; step < arm[a]; ++step) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
            skeleton_leaves.push_back(prev);
        }
    }

    int next = s;
    for (VertexId leaf : skeleton_leaves) edges.emplace_back(leaf, next++);
    while (next < n) edges.emplace_back(static_cast<VertexId>(below(s)), next++);
    return Graph(n, edges);
}

}  // namespace partree
