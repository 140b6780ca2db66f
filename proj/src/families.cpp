#include "partree/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "prufer.hpp"

namespace partree {

namespace {

// mt19937_64 output is fully specified by the standard; the bounded draw
// below avoids the implementation-defined std distributions so that a seed
// names the same graph everywhere
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        // Lemire's multiply-shift rejection method, bias-free
        while (true) {
            std::uint64_t x = engine();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            std::uint64_t lo = static_cast<std::uint64_t>(m);
            if (lo >= bound || lo >= (-bound) % bound) return static_cast<std::uint64_t>(m >> 64);
        }
    }
};

std::vector<std::pair<VertexId, VertexId>> prufer_decode(const std::vector<int>& code, int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> degree;
    detail::prufer_decode_into(code, n, edges, degree);
    return edges;
}

}  // namespace

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph star(int n) {
    if (n < 1) throw std::invalid_argument("star: n must be >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, edges);
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph caterpillar(const std::vector<int>& star_sizes) {
    if (star_sizes.empty()) throw std::invalid_argument("caterpillar: need at least one star");
    for (int s : star_sizes)
        if (s < 1) throw std::invalid_argument("caterpillar: star sizes must be >= 1");
    int p = static_cast<int>(star_sizes.size());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < p; ++i) edges.emplace_back(i, i + 1);
    int next = p;
    for (int i = 0; i < p; ++i)
        for (int leaf = 1; leaf < star_sizes[i]; ++leaf) edges.emplace_back(i, next++);
    return Graph(next, edges);
}

Graph broomstick(int k) {
    if (k < 2) throw std::invalid_argument("broomstick: k must be >= 2");
    int path_n = 1 << k;
    int star_n = 3 * (1 << k) / 4;  // includes the star center
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < path_n; ++i) edges.emplace_back(i, i + 1);
    int center = path_n;
    edges.emplace_back(path_n - 1, center);
    for (int i = 1; i < star_n; ++i) edges.emplace_back(center, center + i);
    return Graph(path_n + star_n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    Rng rng(seed);
    std::vector<int> code(n - 2);
    for (int& c : code) c = static_cast<int>(rng.below(n));
    return Graph(n, prufer_decode(code, n));
}

Graph random_connected_graph(int n, int m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: n must be >= 1");
    std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_m)
        throw std::invalid_argument("random_connected_graph: m out of range");
    Rng rng(seed);
    Graph tree = n >= 3 ? [&] {
        std::vector<int> code(n - 2);
        for (int& c : code) c = static_cast<int>(rng.below(n));
        return Graph(n, prufer_decode(code, n));
    }()
                        : (n == 2 ? Graph(2, {{0, 1}}) : Graph(1, {}));

    std::vector<std::pair<VertexId, VertexId>> edges = tree.edges();
    std::vector<std::pair<VertexId, VertexId>> spare;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!tree.edge_id(i, j)) spare.emplace_back(i, j);
    // partial Fisher-Yates for the extra edges
    int extra = m - (n - 1);
    for (int i = 0; i < extra; ++i) {
        std::size_t j = i + rng.below(spare.size() - i);
        std::swap(spare[i], spare[j]);
        edges.push_back(spare[i]);
    }
    return Graph(n, edges);
}

}  // namespace partree
