#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ccg/coloring.hpp"
#include "ccg/graph.hpp"
#include "ccg/parallel.hpp"
#include "ccg/pattern.hpp"
#include "ccg/treedec.hpp"
#include "ccg/witness.hpp"

namespace ccg {

struct EmbedStats : SearchStats {
    u32 dp_levels = 0;              // sequential bottom-up phases
    u64 max_node_tuple_checks = 0;  // worst per-node candidate count seen
    int td_width = 0;
};

struct EmbedResult {
    bool found = false;
    std::optional<Embedding> witness;
    EmbedStats stats;
};

// Decides and witnesses an injective homomorphism of the decomposed pattern h
// into g. Colors are identified with pattern vertices; family members are
// scanned in canonical index order and the witness comes from the smallest
// succeeding member, with lexicographically smallest tuples. Anchors are
// unary constraints (pattern vertex -> forced host); conflicting or
// non-injective anchor sets make the instance unsatisfiable, not an error.
EmbedResult embed(const Graph& h, const TreeDecomposition& td, const Graph& g,
                  const std::vector<std::pair<u32, u32>>& anchors = {},
                  const RunOptions& opt = {});
EmbedResult embed(const Pattern& pattern, const Graph& g,
                  const std::vector<std::pair<u32, u32>>& anchors = {},
                  const RunOptions& opt = {});

struct BoolResult {
    bool answer = false;
    EmbedStats stats;
};

// Path of length <= d from s to t (respecting direction on digraphs),
// via anchored path embeddings for each length 0..d.
BoolResult distance(const Graph& g, u32 s, u32 t, u32 d, const RunOptions& opt = {});

// Simple path on k vertices.
BoolResult k_path(const Graph& g, u32 k, const RunOptions& opt = {});

// k pairwise vertex-disjoint edges.
BoolResult matching(const Graph& g, u32 k, const RunOptions& opt = {});

} // namespace ccg
