#pragma once

#include <optional>
#include <vector>

#include "ccg/graph.hpp"
#include "ccg/parallel.hpp"
#include "ccg/witness.hpp"

namespace ccg {

struct ClusterResult {
    bool found = false;
    std::optional<ClusterSolution> witness;
    SearchStats stats;
};

// At most k edge edits turning g into exactly l disjoint cliques, by the
// blue/orange search: orange vertices without a smaller orange neighbor
// identify the partly modified clusters as their closed neighborhoods; at
// most 2k leftover vertices are partitioned by brute force.
ClusterResult cluster_editing(const Graph& g, u64 k, u32 l, const RunOptions& opt = {});

// Any number of cliques; components that already are cliques are set aside
// first, then up to 2k clusters are sought on the remainder.
ClusterResult many_cluster_editing(const Graph& g, u64 k, const RunOptions& opt = {});

// l is plain input, not a parameter: surplus clique components are set aside
// (all of size > k, and all but 2k copies of each size <= k); reject when
// l - x > 2k + k(k+1)/2, else solve the remainder for l - x clusters.
ClusterResult cluster_editing_free_l(const Graph& g, u64 k, u32 l, const RunOptions& opt = {});

struct PartiteResult {
    bool found = false;
    std::optional<EditSet> witness;
    SearchStats stats;
};

// Edits making g complete p-partite, via cluster editing on the complement;
// additions and deletions swap on the way back.
PartiteResult p_partite_editing(const Graph& g, u64 k, u32 p, bool p_is_parameter,
                                const RunOptions& opt = {});

// Components C_1..C_l with C_i complete parts[i]-partite: orange vertices
// grouped by the adjacent-or-same-neighborhood equivalence, clusters tried
// under every assignment of identified groups and leftover placements.
ClusterResult multipartite_cluster_editing(const Graph& g, u64 k, const std::vector<u32>& parts,
                                           const RunOptions& opt = {});

} // namespace ccg
