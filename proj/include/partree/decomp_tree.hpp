#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partree/graph.hpp"

namespace partree {

enum class MeasureKind { VptSum, VptMax, EptSum, EptMax, Dc };

std::string measure_name(MeasureKind m);

enum class TreeKind { Vpt, Ept, Clustering };

enum class LabelKind { Vertex, Edge, Internal };

struct TreeNode {
    LabelKind label_kind = LabelKind::Internal;
    int label_id = -1;  // vertex id or edge id; -1 for unlabeled internal nodes
    int parent = -1;
    std::vector<int> children;
};

// Rooted decomposition tree over a graph: a vertex partition tree (every node
// carries a vertex), an edge partition tree (leaves carry vertices, internal
// nodes carry edges) or a binary clustering tree (leaves carry vertices,
// internal nodes are unlabeled). For disconnected graphs a forest with one
// root per component is permitted.
struct DecompTree {
    TreeKind kind = TreeKind::Clustering;
    std::vector<TreeNode> nodes;
    std::vector<int> roots;

    explicit DecompTree(TreeKind k = TreeKind::Clustering) : kind(k) {}

    int add_root(LabelKind lk, int id);
    int add_child(int parent, LabelKind lk, int id);

    bool is_leaf(int x) const { return nodes[x].children.empty(); }
    int size() const { return static_cast<int>(nodes.size()); }

    // number of tree edges on the path from the root of x's tree to x
    int edge_depth(int x) const;

    // vertex ids carried by the leaves below x, sorted
    VertexSet leaf_vertices(int x) const;
    // for VPT trees: all vertex labels in the subtree of x, sorted
    VertexSet subtree_vertices(int x) const;
};

struct Violation {
    int node;  // -1 for tree-level problems
    std::string rule;
    std::string message;
};

struct Diagnosis {
    bool valid = true;
    std::vector<Violation> violations;
};

// Checks t against the recursive partition-tree definition for its kind.
Diagnosis validate(const Graph& g, const DecompTree& t);

// True iff every internal cut of the clustering tree is an inclusion-wise
// minimal cut of its cluster. Throws if t is not a valid clustering tree.
bool is_viable(const Graph& g, const DecompTree& t);

// Exact integer objective of t under `measure`. The tree must be valid for g
// and the measure compatible with t.kind (Dc needs Clustering, Ept* need Ept,
// Vpt* need Vpt); gross mismatches throw.
std::int64_t value(const Graph& g, const DecompTree& t, MeasureKind measure);

enum class RotationDirection { Left, Right };

// DC(t) - DC(rotated t) for a rotation at `node`. Left treats the second
// child as the inner node (shape (a,(b,c)) -> ((a,b),c)), Right the first
// (shape ((a,b),c) -> (a,(b,c))). Throws if the shape does not admit the
// rotation.
std::int64_t rotation_delta(const Graph& g, const DecompTree& t, int node,
                            RotationDirection dir = RotationDirection::Left);

DecompTree rotate(const DecompTree& t, int node, RotationDirection dir);

// Value-preserving conversions between edge partition trees and clustering
// trees: EPT_SUM of the input equals DC of the output and vice versa.
// clustering_to_ept requires a viable input.
DecompTree ept_to_clustering(const Graph& g, const DecompTree& t);
DecompTree clustering_to_ept(const Graph& g, const DecompTree& t);

// Canonical form: children (and roots) ordered by the smallest leaf vertex id
// in their subtree, nodes renumbered in DFS order.
DecompTree canonicalize(const DecompTree& t);
bool structurally_equal(const DecompTree& a, const DecompTree& b);

}  // namespace partree
