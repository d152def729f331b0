#pragma once

#include <optional>

#include "ccg/graph.hpp"
#include "ccg/parallel.hpp"
#include "ccg/witness.hpp"

namespace ccg {

struct CutResult {
    bool found = false;
    std::optional<CutWitness> witness;
    SearchStats stats;
};

// Partition (X, S, Y) with |S| <= k, no X-Y edges, X connected and |X| = l.
// Blue/orange search: per coloring, blue components are explored with a
// distance cap and accepted when exactly l vertices with at most k outside
// neighbors remain. The optional terminal must land in X.
CutResult cut_connected(const Graph& g, u64 k, u32 l, std::optional<u32> terminal = {},
                        const RunOptions& opt = {});

// Same with 1 < |X| <= l and X not necessarily connected. Blue components of
// size 2..l are accepted directly; two singleton blue components combine when
// every connected part of a valid X is a singleton.
CutResult cut_at_most(const Graph& g, u64 k, u32 l, std::optional<u32> terminal = {},
                      const RunOptions& opt = {});

} // namespace ccg
