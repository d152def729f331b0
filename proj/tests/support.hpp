#pragma once

// Shared fixtures and generators for the test suites.

#include <algorithm>
#include <random>
#include <vector>

#include "ccg/graph.hpp"

namespace ccg::testing {

inline Graph path_graph(u32 n) {
    Graph g(n, false);
    for (u32 i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(u32 n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n, 1);
    return g;
}

inline Graph clique_graph(u32 n) {
    Graph g(n, false);
    for (u32 u = 1; u <= n; ++u)
        for (u32 v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph star_graph(u32 leaves) {
    Graph g(leaves + 1, false);
    for (u32 i = 2; i <= leaves + 1; ++i) g.add_edge(1, i);
    return g;
}

inline Graph empty_graph(u32 n) { return Graph(n, false); }

// Disjoint union, vertices of b shifted past a.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count(), false);
    for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
    for (const auto& [u, v] : b.edges()) g.add_edge(a.vertex_count() + u, a.vertex_count() + v);
    return g;
}

// Graph from an edge-bitmask over the pairs (1,2),(1,3),(2,3),(1,4),... in
// column order; used by exhaustive labeled enumerations.
inline Graph graph_from_mask(u32 n, u64 mask) {
    Graph g(n, false);
    u32 bit = 0;
    for (u32 v = 2; v <= n; ++v)
        for (u32 u = 1; u < v; ++u, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

inline u64 pair_count(u32 n) { return static_cast<u64>(n) * (n - 1) / 2; }

// Canonical form under vertex relabeling: the minimal edge mask over all
// permutations. Fine for n <= 8.
inline u64 canonical_mask(u32 n, u64 mask) {
    std::vector<u32> perm(n);
    for (u32 i = 0; i < n; ++i) perm[i] = i + 1;
    // adjacency lookup
    auto bit_of = [&](u32 u, u32 v) {
        if (u > v) std::swap(u, v);
        u32 bit = 0;
        for (u32 vv = 2; vv <= n; ++vv)
            for (u32 uu = 1; uu < vv; ++uu, ++bit)
                if (uu == u && vv == v) return bit;
        return ~u32{0};
    };
    std::vector<std::vector<u32>> table(n + 1, std::vector<u32>(n + 1, 0));
    for (u32 u = 1; u <= n; ++u)
        for (u32 v = 1; v <= n; ++v)
            if (u != v) table[u][v] = bit_of(u, v);
    u64 best = ~u64{0};
    do {
        u64 relabeled = 0;
        u32 bit = 0;
        for (u32 v = 2; v <= n; ++v)
            for (u32 u = 1; u < v; ++u, ++bit)
                if ((mask >> table[perm[u - 1]][perm[v - 1]]) & 1) relabeled |= u64{1} << bit;
        best = std::min(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Canonical masks of all non-isomorphic graphs on exactly n vertices, built
// by extending the (n-1)-vertex representatives with every possible
// neighborhood of a new last vertex. Column-major pair order keeps the
// (n-1)-vertex pairs in the low bits. Practical up to n = 7.
inline std::vector<u64> nonisomorphic_masks(u32 n) {
    if (n <= 1) return {0};
    std::vector<u64> prev = nonisomorphic_masks(n - 1);
    std::vector<u64> out;
    for (u64 base : prev)
        for (u64 nb = 0; nb < (u64{1} << (n - 1)); ++nb) {
            u64 mask = base | (nb << pair_count(n - 1));
            u64 canon = canonical_mask(n, mask);
            if (!std::binary_search(out.begin(), out.end(), canon)) {
                out.insert(std::lower_bound(out.begin(), out.end(), canon), canon);
            }
        }
    return out;
}

inline std::vector<Graph> nonisomorphic_graphs(u32 n) {
    std::vector<Graph> out;
    for (u64 mask : nonisomorphic_masks(n)) out.push_back(graph_from_mask(n, mask));
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() == 0 || connected_components(g).size() == 1;
}

inline Graph random_graph(u32 n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n, false);
    for (u32 u = 1; u <= n; ++u)
        for (u32 v = u + 1; v <= n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline Graph random_connected_graph(u32 n, double p, std::mt19937& rng) {
    while (true) {
        Graph g = random_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
}

} // namespace ccg::testing
