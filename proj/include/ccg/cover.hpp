#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ccg/graph.hpp"
#include "ccg/parallel.hpp"
#include "ccg/witness.hpp"

namespace ccg {

// Parallel Buss kernel: vertices of degree >= k+1 are forced into every
// cover; after removing them and the resulting isolated vertices, more than
// k(k+1) residual vertices refute the instance.
struct Kernel {
    enum class Verdict { kernelized, rejected_too_many_forced, rejected_residual_too_large };

    Verdict verdict = Verdict::kernelized;
    std::vector<u32> forced;
    Graph residual;                       // renumbered induced subgraph
    std::vector<u32> residual_vertices;   // residual id i+1 -> original vertex
    i64 remaining_budget = 0;             // k - |forced|
};

Kernel buss_kernel(const Graph& g, u64 k);

struct CoverResult {
    bool found = false;
    std::optional<CoverWitness> witness;
    SearchStats stats;
    std::optional<Kernel::Verdict> kernel_verdict;
};

// Cover of size <= k: Buss kernel, then exhaustive search on the residual.
CoverResult vertex_cover(const Graph& g, u64 k, const RunOptions& opt = {});

// <= k vertices covering >= t edges. A vertex of degree >= t answers alone;
// otherwise the degree is below t and an (|E|, t, t) edge-coloring family
// drives the search.
CoverResult partial_vertex_cover(const Graph& g, u64 k, u64 t, const RunOptions& opt = {});

// Any number of vertices covering exactly t edges, via the degree-splitting
// reduction (each vertex of degree > t becomes one red vertex per incident
// edge; red vertices are never chosen).
CoverResult exact_partial_vertex_cover(const Graph& g, u64 t, const RunOptions& opt = {});

// The degree-splitting reduction itself. Original vertices keep their ids
// (split ones end up isolated); red replacements are appended and labeled.
struct DegreeSplit {
    Graph graph;
    std::vector<std::pair<u32, u32>> edge_origin;   // split edge index -> original edge
    u32 original_count = 0;
};
DegreeSplit degree_split(const Graph& g, u64 t);

} // namespace ccg
