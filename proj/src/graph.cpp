#include "partree/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace partree {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    vertices_.resize(n);
    for (int i = 0; i < n; ++i) vertices_[i] = i;
    edges_ = edges;
    build_index();
    check_and_index_edges();
}

Graph::Graph(VertexSet vertices, const std::vector<std::pair<VertexId, VertexId>>& edges)
    : vertices_(std::move(vertices)), edges_(edges) {
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        if (vertices_[i] == vertices_[i - 1]) throw std::invalid_argument("duplicate vertex id");
    }
    build_index();
    check_and_index_edges();
}

void Graph::build_index() {
    index_.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] < 0) throw std::invalid_argument("negative vertex id");
        index_[vertices_[i]] = static_cast<int>(i);
    }
    adj_.assign(vertices_.size(), {});
}

void Graph::check_and_index_edges() {
    edge_lookup_.reserve(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto& [u, v] = edges_[e];
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (!has_vertex(u) || !has_vertex(v))
            throw std::invalid_argument("edge endpoint not in vertex set");
        if (u > v) std::swap(u, v);
        auto [it, inserted] = edge_lookup_.emplace(pair_key(u, v), static_cast<EdgeId>(e));
        if (!inserted)
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                        std::to_string(v));
        adj_[index_.at(u)].emplace_back(v, static_cast<EdgeId>(e));
        adj_[index_.at(v)].emplace_back(u, static_cast<EdgeId>(e));
    }
}

std::pair<VertexId, VertexId> Graph::edge(EdgeId e) const {
    if (e < 0 || e >= m()) throw std::out_of_range("unknown edge id " + std::to_string(e));
    return edges_[e];
}

std::optional<EdgeId> Graph::edge_id(VertexId u, VertexId v) const {
    auto it = edge_lookup_.find(pair_key(u, v));
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
}

int Graph::degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

const std::vector<std::pair<VertexId, EdgeId>>& Graph::incident(VertexId v) const {
    return adj_[index_of(v)];
}

int Graph::index_of(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw std::out_of_range("unknown vertex id " + std::to_string(v));
    return it->second;
}

void Graph::set_label(VertexId v, std::string label) {
    index_of(v);
    labels_[v] = std::move(label);
}

std::optional<std::string> Graph::label(VertexId v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(vertices_.size(), false);
    for (std::size_t s = 0; s < vertices_.size(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::deque<int> queue{static_cast<int>(s)};
        seen[s] = true;
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            comp.push_back(vertices_[i]);
            for (auto [w, e] : adj_[i]) {
                int j = index_.at(w);
                if (!seen[j]) {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // vertices_ is sorted, so scanning seeds in order already yields
    // components ordered by smallest member
    return comps;
}

Graph Graph::induced(const VertexSet& subset) const {
    std::vector<std::pair<VertexId, VertexId>> sub_edges;
    std::unordered_map<VertexId, bool> in;
    in.reserve(subset.size());
    for (VertexId v : subset) {
        index_of(v);
        in[v] = true;
    }
    for (const auto& [u, v] : edges_) {
        if (in.count(u) && in.count(v)) sub_edges.emplace_back(u, v);
    }
    Graph sub(subset, sub_edges);
    for (VertexId v : subset) {
        auto it = labels_.find(v);
        if (it != labels_.end()) sub.labels_[v] = it->second;
    }
    return sub;
}

std::vector<Graph> Graph::remove_vertex(VertexId v) const {
    index_of(v);
    VertexSet rest;
    rest.reserve(vertices_.size() - 1);
    for (VertexId u : vertices_)
        if (u != v) rest.push_back(u);
    Graph g = induced(rest);
    std::vector<Graph> out;
    for (const auto& comp : g.connected_components()) out.push_back(g.induced(comp));
    return out;
}

std::vector<Graph> Graph::remove_edge(EdgeId e) const {
    edge(e);  // range check
    std::vector<std::pair<VertexId, VertexId>> rest;
    rest.reserve(edges_.size() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (static_cast<EdgeId>(i) != e) rest.push_back(edges_[i]);
    Graph g(vertices_, rest);
    std::vector<Graph> out;
    for (const auto& comp : g.connected_components()) out.push_back(g.induced(comp));
    return out;
}

std::pair<Graph, int> Graph::spine_tree() const {
    Classification c = classify();
    if (!c.is_tree) throw std::invalid_argument("spine_tree: input is not a tree");
    // The paper only defines the spine for trees that have internal vertices;
    // for n <= 2 we use the empty spine with d = 0, for stars d = 1.
    if (n() <= 2) return {Graph(VertexSet{}, {}), 0};
    VertexSet spine;
    for (VertexId v : vertices_)
        if (degree(v) >= 2) spine.push_back(v);
    Graph s = induced(spine);
    int d;
    if (s.n() <= 1) {
        d = s.n();  // star: single spine vertex counts as one leaf
    } else {
        d = 0;
        for (VertexId v : s.vertices())
            if (s.degree(v) == 1) ++d;
    }
    return {std::move(s), d};
}

std::vector<EdgeId> Graph::balanced_edges() const {
    Classification c = classify();
    if (!c.is_tree) throw std::invalid_argument("balanced_edges: input is not a tree");
    if (n() < 2) throw std::invalid_argument("balanced_edges: need at least 2 vertices");

    // subtree sizes from an arbitrary root; for edge (parent,child) the split
    // is (size[child], n - size[child])
    std::vector<int> parent(n(), -1), order;
    std::vector<bool> seen(n(), false);
    order.reserve(n());
    order.push_back(0);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int i = order[head];
        for (auto [w, e] : adj_[i]) {
            int j = index_.at(w);
            if (!seen[j]) {
                seen[j] = true;
                parent[j] = i;
                order.push_back(j);
            }
        }
    }
    std::vector<int> size(n(), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];

    int best = n() + 1;
    std::vector<EdgeId> result;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        int iu = index_.at(edges_[e].first), iv = index_.at(edges_[e].second);
        int child = (parent[iv] == iu) ? iv : iu;
        int largest = std::max(size[child], n() - size[child]);
        if (largest < best) {
            best = largest;
            result.clear();
        }
        if (largest == best) result.push_back(static_cast<EdgeId>(e));
    }
    return result;
}

Classification Graph::classify() const {
    Classification c;
    auto comps = connected_components();
    c.is_connected = comps.size() <= 1;
    c.is_tree = c.is_connected && n() >= 1 && m() == n() - 1;
    if (!c.is_tree) return c;

    int high_degree = 0;
    int max_degree = 0;
    for (VertexId v : vertices_) {
        int d = degree(v);
        max_degree = std::max(max_degree, d);
        if (d >= 2) ++high_degree;
    }
    c.is_path = max_degree <= 2;
    c.is_star = high_degree <= 1;

    if (n() <= 2) {
        c.is_caterpillar = true;
        return c;
    }
    // caterpillar iff the induced spine is a path; the spine of a tree is
    // connected, so checking internal degrees suffices
    VertexSet spine;
    for (VertexId v : vertices_)
        if (degree(v) >= 2) spine.push_back(v);
    bool spine_is_path = true;
    if (spine.size() > 1) {
        Graph s = induced(spine);
        for (VertexId v : s.vertices())
            if (s.degree(v) > 2) spine_is_path = false;
    }
    c.is_caterpillar = spine_is_path;
    return c;
}

Graph parse_edgelist(const std::string& text) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    VertexSet declared;
    std::unordered_map<std::uint64_t, int> seen_edges;  // key -> line
    std::unordered_map<VertexId, bool> seen_vertices;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto note_vertex = [&](VertexId v) {
        if (!seen_vertices.count(v)) {
            seen_vertices[v] = true;
            declared.push_back(v);
        }
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line.substr(first));
        std::string a, b, extra;
        ls >> a;
        if (a == "v") {
            long id;
            if (!(ls >> id) || id < 0 || (ls >> extra))
                throw ParseError(lineno, "malformed vertex declaration: " + line);
            note_vertex(static_cast<VertexId>(id));
            continue;
        }
        if (!(ls >> b) || (ls >> extra))
            throw ParseError(lineno, "malformed edge line: " + line);
        long u, v;
        try {
            std::size_t pa = 0, pb = 0;
            u = std::stol(a, &pa);
            v = std::stol(b, &pb);
            if (pa != a.size() || pb != b.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(lineno, "malformed edge line: " + line);
        }
        if (u < 0 || v < 0) throw ParseError(lineno, "negative vertex id");
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        std::uint64_t key = pair_key(static_cast<VertexId>(u), static_cast<VertexId>(v));
        auto [it, inserted] = seen_edges.emplace(key, lineno);
        if (!inserted)
            throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " +
                                         std::to_string(v) + " (first on line " +
                                         std::to_string(it->second) + ")");
        note_vertex(static_cast<VertexId>(u));
        note_vertex(static_cast<VertexId>(v));
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return Graph(declared, edges);
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    for (VertexId v : g.vertices())
        if (g.degree(v) == 0) out << "v " << v << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace partree
