#pragma once

#include <optional>
#include <vector>

#include "ccg/cut.hpp"
#include "ccg/graph.hpp"
#include "ccg/local.hpp"
#include "ccg/witness.hpp"

namespace ccg::oracle {

// Exhaustive reference solvers. Ground truth for every property test; no
// coloring families anywhere. Guards are hard errors (host <= 10 vertices;
// k, t, l <= 4; edit budget <= 3) so a passing suite can never hide an
// unevaluated case.

std::optional<Embedding> embed(const Graph& h, const Graph& g,
                               const std::vector<std::pair<u32, u32>>& anchors = {});
bool distance(const Graph& g, u32 s, u32 t, u32 d);
bool k_path(const Graph& g, u32 k);
bool matching(const Graph& g, u32 k);
std::optional<Embedding> pack(const Graph& g, const std::vector<Graph>& components);

std::optional<CoverWitness> vertex_cover(const Graph& g, u64 k);
std::optional<CoverWitness> partial_vertex_cover(const Graph& g, u64 k, u64 t);
std::optional<CoverWitness> exact_partial_vertex_cover(const Graph& g, u64 t);

// cluster_count empty = any number of cliques.
std::optional<ClusterSolution> cluster_editing(const Graph& g, u64 k,
                                               std::optional<u32> cluster_count);
std::optional<EditSet> p_partite_editing(const Graph& g, u64 k, u32 p);
std::optional<ClusterSolution> multipartite_cluster_editing(const Graph& g, u64 k,
                                                            const std::vector<u32>& parts);

std::optional<CutWitness> cut(const Graph& g, u64 k, u32 l, CutMode mode,
                              std::optional<u32> terminal = {});

std::optional<BallsWitness> scattered_balls(const Graph& g, u32 k, u32 r,
                                            const LocalPredicate& pred);

} // namespace ccg::oracle
