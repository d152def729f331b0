#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccg/graph.hpp"
#include "ccg/types.hpp"

namespace ccg {

// Injective homomorphism: assignment[u] is the host of pattern vertex u
// (1-based, slot 0 unused).
struct Embedding {
    std::vector<u32> assignment;
};

struct CoverWitness {
    std::vector<u32> vertices;
    std::vector<std::pair<u32, u32>> covered;
};

struct EditSet {
    std::vector<std::pair<u32, u32>> additions;
    std::vector<std::pair<u32, u32>> deletions;

    u64 cost() const { return additions.size() + deletions.size(); }
};

struct ClusterSolution {
    EditSet edits;
    std::vector<std::vector<u32>> clusters;
};

struct CutWitness {
    std::vector<u32> x;
    std::vector<u32> s;
    std::vector<u32> y;
};

struct BallsWitness {
    std::vector<u32> centers;
    u32 radius = 0;
};

// Work accounting shared by every family-driven solver.
struct SearchStats {
    std::string family_size;        // exact decimal
    u64 family_size_u64 = 0;        // 0 when the exact count exceeds 64 bits
    bool family_size_fits = false;
    u64 family_blocks = 0;
    u64 colorings_checked = 0;      // distinct color assignments evaluated, canonical order
    double millis = 0.0;
    int threads = 1;
};

// --- independent witness checkers -----------------------------------------
// Each returns std::nullopt when the witness is valid, else a reason. They
// recompute everything from the graph and never consult solver internals.

using CheckResult = std::optional<std::string>;

CheckResult check_embedding(const Graph& h, const Graph& g, const Embedding& emb,
                            const std::vector<std::pair<u32, u32>>& anchors = {});

enum class CoverMode { all_edges, at_least, exactly };
CheckResult check_cover(const Graph& g, const CoverWitness& w, CoverMode mode, u64 budget,
                        u64 target);

// mode: each cluster must be a clique (parts empty) or complete p_i-partite
// with parts matched as a multiset.
CheckResult check_cluster_solution(const Graph& g, const ClusterSolution& sol, u64 budget,
                                   std::optional<u64> cluster_count,
                                   const std::vector<u32>& parts = {});
CheckResult check_edit_set(const Graph& g, const EditSet& edits);

// Applies edits and returns the edited graph; throws domain_error when the
// edit set is inconsistent with g.
Graph apply_edits(const Graph& g, const EditSet& edits);

// True iff the graph induced on `vertices` is complete p-partite.
bool is_complete_multipartite(const Graph& g, const std::vector<u32>& vertices, u32 p);

enum class CutMode { connected_exact, at_most };
CheckResult check_cut(const Graph& g, const CutWitness& w, u64 budget, u64 size, CutMode mode,
                      std::optional<u32> terminal);

CheckResult check_balls(const Graph& g, const BallsWitness& w, u32 k, u32 radius,
                        const std::function<bool(const Graph&, u32)>& predicate);

} // namespace ccg
