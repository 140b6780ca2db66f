#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "partree/decomp_tree.hpp"
#include "partree/graph.hpp"
#include "partree/solve_result.hpp"

namespace partree {

// Graph JSON: {"n": ..., "edges": [[u,v], ...]}, plus "labels" when vertex
// labels are set and "vertices" when the id range is not contiguous.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Tree JSON: nested {"label": {"kind": "vertex"|"edge"|"internal",
// "id": int|null}, "children": [...]}; a forest is a list of such objects.
nlohmann::json tree_to_json(const DecompTree& t);
DecompTree tree_from_json(const nlohmann::json& j,
                          std::optional<TreeKind> kind_hint = std::nullopt);

nlohmann::json solve_result_to_json(const SolveResult& r);

// DOT export with leaves drawn as boxes and internal nodes as circles.
std::string tree_to_dot(const Graph& g, const DecompTree& t);

// FamilySpec JSON: {"family": name, "params": {...}, "seed": int?}
Graph graph_from_family_spec(const nlohmann::json& spec);

MeasureKind measure_from_name(const std::string& name);

}  // namespace partree
