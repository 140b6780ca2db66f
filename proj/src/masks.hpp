#pragma once

// Internal subset machinery for the solvers: vertex subsets of a fixed graph
// encoded as bitmasks over dense vertex indices. Mask64 covers n <= 64, the
// wide variant any n. Not installed; include from src/ only.

#include <cstdint>
#include <functional>
#include <vector>

#include "partree/graph.hpp"

namespace partree::detail {

struct Mask64 {
    std::uint64_t bits = 0;

    static Mask64 empty(int) { return {}; }
    bool operator==(const Mask64&) const = default;
    bool none() const { return bits == 0; }
    int count() const { return __builtin_popcountll(bits); }
    bool test(int i) const { return (bits >> i) & 1u; }
    void set(int i) { bits |= (1ull << i); }
    void reset(int i) { bits &= ~(1ull << i); }
    int lowest() const { return __builtin_ctzll(bits); }
    Mask64 operator&(const Mask64& o) const { return {bits & o.bits}; }
    Mask64 operator|(const Mask64& o) const { return {bits | o.bits}; }
    Mask64 minus(const Mask64& o) const { return {bits & ~o.bits}; }
    Mask64 without(int i) const {
        Mask64 r = *this;
        r.reset(i);
        return r;
    }
    template <class F>
    void for_each(F f) const {
        std::uint64_t rest = bits;
        while (rest) {
            int i = __builtin_ctzll(rest);
            f(i);
            rest &= rest - 1;
        }
    }
    std::size_t hash() const {
        std::uint64_t x = bits + 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};

struct MaskWide {
    std::vector<std::uint64_t> words;

    static MaskWide empty(int n) { return {std::vector<std::uint64_t>((n + 63) / 64, 0)}; }
    bool operator==(const MaskWide&) const = default;
    bool none() const {
        for (auto w : words)
            if (w) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto w : words) c += __builtin_popcountll(w);
        return c;
    }
    bool test(int i) const { return (words[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words[i >> 6] |= (1ull << (i & 63)); }
    void reset(int i) { words[i >> 6] &= ~(1ull << (i & 63)); }
    int lowest() const {
        for (std::size_t w = 0; w < words.size(); ++w)
            if (words[w]) return static_cast<int>(w * 64) + __builtin_ctzll(words[w]);
        return -1;
    }
    MaskWide operator&(const MaskWide& o) const {
        MaskWide r = *this;
        for (std::size_t w = 0; w < words.size(); ++w) r.words[w] &= o.words[w];
        return r;
    }
    MaskWide operator|(const MaskWide& o) const {
        MaskWide r = *this;
        for (std::size_t w = 0; w < words.size(); ++w) r.words[w] |= o.words[w];
        return r;
    }
    MaskWide minus(const MaskWide& o) const {
        MaskWide r = *this;
        for (std::size_t w = 0; w < words.size(); ++w) r.words[w] &= ~o.words[w];
        return r;
    }
    MaskWide without(int i) const {
        MaskWide r = *this;
        r.reset(i);
        return r;
    }
    template <class F>
    void for_each(F f) const {
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t rest = words[w];
            while (rest) {
                f(static_cast<int>(w * 64) + __builtin_ctzll(rest));
                rest &= rest - 1;
            }
        }
    }
    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto w : words) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

template <class Mask>
struct MaskHash {
    std::size_t operator()(const Mask& m) const { return m.hash(); }
};

// Dense-index view of a graph for subset recursions.
template <class Mask>
struct SubsetContext {
    const Graph* g = nullptr;
    int n = 0;
    std::vector<Mask> adj;                      // by dense index
    std::vector<std::pair<int, int>> edge_idx;  // dense endpoints by edge id
    Mask full;

    explicit SubsetContext(const Graph& graph) : g(&graph), n(graph.n()) {
        adj.assign(n, Mask::empty(n));
        full = Mask::empty(n);
        for (int i = 0; i < n; ++i) full.set(i);
        edge_idx.reserve(graph.m());
        for (int e = 0; e < graph.m(); ++e) {
            auto [u, v] = graph.edge(e);
            int iu = graph.index_of(u), iv = graph.index_of(v);
            adj[iu].set(iv);
            adj[iv].set(iu);
            edge_idx.emplace_back(iu, iv);
        }
    }

    Mask empty_mask() const { return Mask::empty(n); }

    // components of the subgraph induced by `sub`, optionally with one edge
    // treated as absent; ordered by smallest dense index
    std::vector<Mask> components(const Mask& sub, int blocked_edge = -1) const {
        std::vector<Mask> comps;
        Mask todo = sub;
        int bu = -1, bv = -1;
        if (blocked_edge >= 0) {
            bu = edge_idx[blocked_edge].first;
            bv = edge_idx[blocked_edge].second;
        }
        while (!todo.none()) {
            int seed = todo.lowest();
            Mask comp = Mask::empty(n);
            comp.set(seed);
            Mask frontier = comp;
            while (!frontier.none()) {
                Mask grow = Mask::empty(n);
                frontier.for_each([&](int i) {
                    Mask nb = adj[i] & sub;
                    if (i == bu) nb.reset(bv);
                    if (i == bv) nb.reset(bu);
                    grow = grow | nb;
                });
                frontier = grow.minus(comp);
                comp = comp | frontier;
            }
            comps.push_back(comp);
            todo = todo.minus(comp);
        }
        return comps;
    }

    VertexSet to_vertex_set(const Mask& m) const {
        VertexSet out;
        out.reserve(m.count());
        m.for_each([&](int i) { out.push_back(g->vertex_at(i)); });
        return out;
    }

    // components of the subgraph (vertices, present edge set); needed when
    // removed edges are not expressible as an induced subgraph (m <= 64)
    std::vector<std::pair<Mask, std::uint64_t>> subgraph_components(
        const Mask& sub, std::uint64_t present_edges) const {
        std::vector<int> root(n);
        sub.for_each([&](int i) { root[i] = i; });
        std::function<int(int)> find = [&](int i) {
            while (root[i] != i) i = root[i] = root[root[i]];
            return i;
        };
        std::uint64_t rest = present_edges;
        while (rest) {
            int e = __builtin_ctzll(rest);
            rest &= rest - 1;
            auto [iu, iv] = edge_idx[e];
            root[find(iu)] = find(iv);
        }
        std::vector<std::pair<Mask, std::uint64_t>> comps;
        std::vector<int> comp_of(n, -1);
        sub.for_each([&](int i) {
            int r = find(i);
            if (comp_of[r] < 0) {
                comp_of[r] = static_cast<int>(comps.size());
                comps.emplace_back(Mask::empty(n), 0);
            }
            comps[comp_of[r]].first.set(i);
        });
        rest = present_edges;
        while (rest) {
            int e = __builtin_ctzll(rest);
            rest &= rest - 1;
            comps[comp_of[find(edge_idx[e].first)]].second |= (1ull << e);
        }
        return comps;
    }
};

}  // namespace partree::detail
