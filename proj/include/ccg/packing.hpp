#pragma once

#include <optional>
#include <vector>

#include "ccg/embed.hpp"
#include "ccg/graph.hpp"
#include "ccg/witness.hpp"

namespace ccg {

struct PackResult {
    bool found = false;
    std::optional<Embedding> witness;   // over the union pattern
    Graph pattern;                      // the disjoint-union pattern searched
    EmbedStats stats;
};

// Pairwise vertex-disjoint copies of every multiset component (each <= 5
// vertices) inside g. Pure reduction to embed on the canonical union pattern.
PackResult pack(const Graph& g, const std::vector<Graph>& components, const RunOptions& opt = {});

// k disjoint cycles C_l (l >= 3), paths on l vertices (l >= 1), or copies of
// an explicit forest.
PackResult pack_cycles(const Graph& g, u32 k, u32 l, const RunOptions& opt = {});
PackResult pack_paths(const Graph& g, u32 k, u32 l, const RunOptions& opt = {});
PackResult pack_forest(const Graph& g, const Graph& forest, u32 k = 1, const RunOptions& opt = {});

} // namespace ccg
