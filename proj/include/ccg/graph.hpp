#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ccg/types.hpp"

namespace ccg {

// Simple graph over vertices 1..n, optionally directed. No self-loops, no
// duplicate edges; undirected edges are stored once as (min,max) and the
// adjacency structure is kept symmetric. Vertex order is part of the data
// model: 1..n in input order is the canonical order everywhere.
//
// Instances are immutable once built (add_edge is construction-phase only)
// and safe to share across worker threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(u32 vertex_count, bool directed = false);
    Graph(u32 vertex_count, const std::vector<std::pair<u32, u32>>& edges,
          bool directed = false);

    u32 vertex_count() const { return n_; }
    u32 edge_count() const { return static_cast<u32>(edges_.size()); }
    bool directed() const { return directed_; }

    // Throws domain_error on loops, duplicates or out-of-range endpoints.
    void add_edge(u32 u, u32 v);

    bool has_edge(u32 u, u32 v) const;   // arc u->v when directed
    bool has_undirected(u32 u, u32 v) const;

    // Canonically sorted edge list: (min,max) pairs for undirected graphs,
    // arcs as given for digraphs, lexicographic order.
    const std::vector<std::pair<u32, u32>>& edges() const { return edges_; }

    // Undirected: all neighbors. Directed: out-neighbors.
    const std::vector<u32>& neighbors(u32 v) const { return check_v(v), adj_[v]; }
    const std::vector<u32>& in_neighbors(u32 v) const { return check_v(v), in_adj_[v]; }
    // Neighbors ignoring direction (equals neighbors() when undirected).
    const std::vector<u32>& undirected_neighbors(u32 v) const { return check_v(v), und_adj_[v]; }

    u32 degree(u32 v) const { return static_cast<u32>(undirected_neighbors(v).size()); }

    // Optional vertex label set ("red" vertices of the degree-splitting
    // reduction). Sorted, may be empty.
    const std::vector<u32>& labels() const { return labels_; }
    bool has_label(u32 v) const;
    void set_labels(std::vector<u32> labels);

    bool operator==(const Graph& other) const;

private:
    void check_v(u32 v) const;
    u64 bit_index(u32 u, u32 v) const { return static_cast<u64>(u - 1) * n_ + (v - 1); }

    u32 n_ = 0;
    bool directed_ = false;
    std::vector<std::pair<u32, u32>> edges_;
    std::vector<std::vector<u32>> adj_;
    std::vector<std::vector<u32>> in_adj_;
    std::vector<std::vector<u32>> und_adj_;
    std::vector<u64> matrix_;   // row-major n*n bitset, arc u->v
    std::vector<u32> labels_;
};

// Edge-list document: optional '#' comment lines, header "<n> <m> [directed]",
// then m lines "<u> <v>", optionally one trailing "labels v1 v2 ..." line.
// Errors name the offending line.
Graph parse_graph(const std::string& text);

// Normalizes whitespace and sorts edges lexicographically; parse/serialize
// round-trips bit-exactly on serialized output.
std::string serialize_graph(const Graph& g);

// Induced subgraph on all vertices at undirected distance <= r from center,
// plus the map from new vertex ids (1-based, in host order) back to g.
struct BallView {
    Graph graph;
    std::vector<u32> to_host;   // to_host[i-1] = host vertex of ball vertex i
    u32 center = 0;             // ball-local id of the center
};
BallView ball(const Graph& g, u32 center, u32 radius);

// Edge present iff absent in g. Undirected input only.
Graph complement(const Graph& g);

// BFS distances from source; ~0u where unreachable. Follows arc direction on
// digraphs unless ignore_direction is set.
std::vector<u32> bfs_distances(const Graph& g, u32 source, bool ignore_direction = false);

std::vector<std::vector<u32>> connected_components(const Graph& g);
bool is_clique(const Graph& g, const std::vector<u32>& vertices);

} // namespace ccg
