#pragma once

// Linear-time Prufer decoding shared by the family generators and the
// exhaustive tree corpus. Internal header.

#include <utility>
#include <vector>

#include "partree/graph.hpp"

namespace partree::detail {

inline void prufer_decode_into(const std::vector<int>& code, int n,
                               std::vector<std::pair<VertexId, VertexId>>& edges,
                               std::vector<int>& degree) {
    degree.assign(n, 1);
    for (int c : code) ++degree[c];
    edges.clear();
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int c : code) {
        edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
        if (--degree[c] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
}

}  // namespace partree::detail
