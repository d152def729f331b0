#pragma once

#include <string>
#include <vector>

#include "ccg/graph.hpp"
#include "ccg/types.hpp"

namespace ccg {

// Rooted tree of bags over a pattern graph. Nodes are 0..node_count()-1,
// parent[i] < 0 marks the single root. Bags hold sorted pattern vertices.
struct TreeDecomposition {
    std::vector<int> parent;
    std::vector<std::vector<u32>> bags;

    u32 node_count() const { return static_cast<u32>(bags.size()); }
    int root() const;
    std::vector<std::vector<u32>> children() const;

    // Largest bag size minus one.
    int width() const;
    // Edge count of each node's root path.
    std::vector<u32> node_depths() const;
    // Number of distinct node depths (sequential DP phases).
    u32 levels() const;
    // max(width, longest root-to-leaf path).
    int depth() const;
};

struct TdValidation {
    bool valid = true;
    std::string reason;
};

// Checks tree shape, bag contents, vertex and edge coverage, and the
// connected-occurrence condition; reports the first violation found.
TdValidation validate_tree_decomposition(const Graph& h, const TreeDecomposition& td);

// Minimum-width decomposition by exhaustive search over elimination orders.
// Guarded to |V(h)| <= 8.
TreeDecomposition exact_tree_decomposition(const Graph& h);

} // namespace ccg
