#include "partree/io.hpp"

#include <algorithm>
#include <sstream>

#include "partree/families.hpp"

namespace partree {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    bool contiguous = g.n() == 0 || (g.vertices().front() == 0 && g.vertices().back() == g.n() - 1);
    if (!contiguous) j["vertices"] = g.vertices();
    if (!g.labels().empty()) {
        json labels = json::object();
        for (const auto& [v, text] : g.labels()) labels[std::to_string(v)] = text;
        j["labels"] = std::move(labels);
    }
    return j;
}

Graph graph_from_json(const json& j) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph json: bad edge");
        edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    VertexSet vertices;
    if (j.contains("vertices")) {
        vertices = j.at("vertices").get<VertexSet>();
    } else {
        int n = j.at("n").get<int>();
        vertices.resize(n);
        for (int i = 0; i < n; ++i) vertices[i] = i;
    }
    Graph g(vertices, edges);
    if (j.contains("labels")) {
        for (const auto& [key, text] : j.at("labels").items())
            g.set_label(std::stoi(key), text.get<std::string>());
    }
    return g;
}

namespace {

json node_to_json(const DecompTree& t, int x) {
    json label;
    switch (t.nodes[x].label_kind) {
        case LabelKind::Vertex:
            label = {{"kind", "vertex"}, {"id", t.nodes[x].label_id}};
            break;
        case LabelKind::Edge:
            label = {{"kind", "edge"}, {"id", t.nodes[x].label_id}};
            break;
        case LabelKind::Internal:
            label = {{"kind", "internal"}, {"id", nullptr}};
            break;
    }
    json children = json::array();
    for (int c : t.nodes[x].children) children.push_back(node_to_json(t, c));
    return {{"label", std::move(label)}, {"children", std::move(children)}};
}

void node_from_json(const json& j, DecompTree& t, int parent, bool& saw_edge, bool& saw_internal) {
    const json& label = j.at("label");
    std::string kind = label.at("kind").get<std::string>();
    LabelKind lk;
    int id = -1;
    if (kind == "vertex") {
        lk = LabelKind::Vertex;
        id = label.at("id").get<int>();
    } else if (kind == "edge") {
        lk = LabelKind::Edge;
        id = label.at("id").get<int>();
        saw_edge = true;
    } else if (kind == "internal") {
        lk = LabelKind::Internal;
        saw_internal = true;
    } else {
        throw std::invalid_argument("tree json: unknown label kind " + kind);
    }
    int node = parent < 0 ? t.add_root(lk, id) : t.add_child(parent, lk, id);
    for (const auto& c : j.at("children")) node_from_json(c, t, node, saw_edge, saw_internal);
}

}  // namespace

json tree_to_json(const DecompTree& t) {
    if (t.roots.size() == 1) return node_to_json(t, t.roots[0]);
    json forest = json::array();
    for (int r : t.roots) forest.push_back(node_to_json(t, r));
    return forest;
}

DecompTree tree_from_json(const json& j, std::optional<TreeKind> kind_hint) {
    DecompTree t(TreeKind::Vpt);
    bool saw_edge = false, saw_internal = false;
    if (j.is_array()) {
        for (const auto& root : j) node_from_json(root, t, -1, saw_edge, saw_internal);
    } else {
        node_from_json(j, t, -1, saw_edge, saw_internal);
    }
    if (kind_hint) {
        t.kind = *kind_hint;
    } else if (saw_edge) {
        t.kind = TreeKind::Ept;
    } else if (saw_internal) {
        t.kind = TreeKind::Clustering;
    } else {
        t.kind = TreeKind::Vpt;
    }
    return t;
}

json solve_result_to_json(const SolveResult& r) {
    return {{"value", r.value},
            {"measure", measure_name(r.measure)},
            {"algorithm", r.algorithm},
            {"witness", tree_to_json(r.witness)},
            {"stats",
             {{"subproblems", r.stats.subproblems},
              {"elapsed_seconds", r.stats.elapsed_seconds}}}};
}

std::string tree_to_dot(const Graph& g, const DecompTree& t) {
    std::ostringstream out;
    out << "digraph partition_tree {\n";
    for (int x = 0; x < t.size(); ++x) {
        std::string shape = t.is_leaf(x) ? "box" : "circle";
        std::string text;
        switch (t.nodes[x].label_kind) {
            case LabelKind::Vertex: {
                text = std::to_string(t.nodes[x].label_id);
                auto name = g.label(t.nodes[x].label_id);
                if (name) text += ": " + *name;
                break;
            }
            case LabelKind::Edge: {
                auto [u, v] = g.edge(t.nodes[x].label_id);
                text = "e" + std::to_string(t.nodes[x].label_id) + " (" + std::to_string(u) +
                       "-" + std::to_string(v) + ")";
                break;
            }
            case LabelKind::Internal:
                text = "";
                break;
        }
        out << "  n" << x << " [shape=" << shape << ", label=\"" << text << "\"];\n";
    }
    for (int x = 0; x < t.size(); ++x)
        for (int c : t.nodes[x].children) out << "  n" << x << " -> n" << c << ";\n";
    out << "}\n";
    return out.str();
}

Graph graph_from_family_spec(const json& spec) {
    std::string family = spec.at("family").get<std::string>();
    json params = spec.value("params", json::object());
    std::uint64_t seed = spec.value("seed", std::uint64_t{0});
    if (family == "path") return path(params.at("n").get<int>());
    if (family == "star") return star(params.at("n").get<int>());
    if (family == "complete") return complete(params.at("n").get<int>());
    if (family == "caterpillar")
        return caterpillar(params.at("sizes").get<std::vector<int>>());
    if (family == "broomstick") return broomstick(params.at("k").get<int>());
    if (family == "random-tree") return random_tree(params.at("n").get<int>(), seed);
    if (family == "random-connected-graph")
        return random_connected_graph(params.at("n").get<int>(), params.at("m").get<int>(), seed);
    throw std::invalid_argument("unknown family: " + family);
}

MeasureKind measure_from_name(const std::string& name) {
    if (name == "vpt-sum") return MeasureKind::VptSum;
    if (name == "vpt-max") return MeasureKind::VptMax;
    if (name == "ept-sum") return MeasureKind::EptSum;
    if (name == "ept-max") return MeasureKind::EptMax;
    if (name == "dc") return MeasureKind::Dc;
    throw std::invalid_argument("unknown measure: " + name);
}

}  // namespace partree
