#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace partree {

using VertexId = int;
using EdgeId = int;

// Canonical sorted, duplicate-free set of vertex ids. Subgraph operations
// preserve ids, so a VertexSet taken from a subgraph is directly usable as a
// memoization key against the original graph.
using VertexSet = std::vector<VertexId>;

struct Classification {
    bool is_tree = false;
    bool is_star = false;
    bool is_caterpillar = false;
    bool is_path = false;
    bool is_connected = false;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Undirected, unweighted graph with stable vertex ids and edge ids.
// Edge ids are contiguous 0..m-1 in construction order. Immutable after
// construction except for vertex labels; all queries are const and safe to
// call concurrently.
class Graph {
public:
    Graph() = default;

    // Vertices 0..n-1.
    Graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    // Explicit vertex set; ids need not be contiguous.
    Graph(VertexSet vertices, const std::vector<std::pair<VertexId, VertexId>>& edges);

    int n() const { return static_cast<int>(vertices_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }

    const VertexSet& vertices() const { return vertices_; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    std::pair<VertexId, VertexId> edge(EdgeId e) const;

    bool has_vertex(VertexId v) const { return index_.count(v) != 0; }
    std::optional<EdgeId> edge_id(VertexId u, VertexId v) const;
    int degree(VertexId v) const;

    // Neighbors of v as (neighbor id, edge id), in edge-insertion order.
    const std::vector<std::pair<VertexId, EdgeId>>& incident(VertexId v) const;

    // Dense position of v in the sorted vertex list, 0..n-1.
    int index_of(VertexId v) const;
    VertexId vertex_at(int index) const { return vertices_[index]; }

    void set_label(VertexId v, std::string label);
    std::optional<std::string> label(VertexId v) const;
    const std::unordered_map<VertexId, std::string>& labels() const { return labels_; }

    // Maximal connected vertex sets, each sorted, ordered by smallest member.
    std::vector<VertexSet> connected_components() const;

    // Induced subgraph on `subset`; vertex ids preserved, edge ids reassigned
    // contiguously in the original relative order.
    Graph induced(const VertexSet& subset) const;

    // Component subgraphs of G-v / G-e, ordered by smallest vertex id.
    std::vector<Graph> remove_vertex(VertexId v) const;
    std::vector<Graph> remove_edge(EdgeId e) const;

    // Induced subgraph on the non-leaf vertices plus its leaf count d.
    // Convention for degenerate trees: n <= 2 gives an empty spine with d = 0,
    // a star gives the single-vertex spine with d = 1.
    std::pair<Graph, int> spine_tree() const;

    // Edges minimizing the larger component of G-e, sorted by edge id.
    std::vector<EdgeId> balanced_edges() const;

    Classification classify() const;

private:
    void build_index();
    void check_and_index_edges();

    VertexSet vertices_;
    std::vector<std::pair<VertexId, VertexId>> edges_;  // normalized u < v
    std::unordered_map<VertexId, int> index_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;  // by dense index
    std::unordered_map<std::uint64_t, EdgeId> edge_lookup_;
    std::unordered_map<VertexId, std::string> labels_;
};

// Text edge-list format: one "u v" pair per line, '#' starts a comment line,
// blank lines are ignored, "v <id>" declares an isolated vertex.
Graph parse_edgelist(const std::string& text);
std::string to_edgelist(const Graph& g);

}  // namespace partree
