#pragma once

#include <vector>

#include "ccg/graph.hpp"
#include "ccg/treedec.hpp"
#include "ccg/types.hpp"

namespace ccg {

// Pattern constructors with canonical rooted decompositions. Disjoint unions
// hang one subtree per copy under a synthetic empty root bag.
struct PatternSpec {
    enum class Kind {
        copies,        // k disjoint copies of an explicit graph (<= 8 vertices)
        multiset,      // disjoint union of explicit graphs
        cycles,        // k copies of the cycle C_l, l >= 3
        paths,         // k copies of the path on l vertices, l >= 1
        forest,        // k copies of an explicit forest
        anchored_path, // path with `length` edges; endpoints exposed as anchors
    };

    Kind kind = Kind::copies;
    Graph component;                // copies / forest / anchored component
    std::vector<Graph> components;  // multiset
    u32 k = 1;
    u32 l = 0;                      // cycle/path vertex count
    u32 length = 0;                 // anchored path edge count
    bool directed = false;          // directed paths (distance on digraphs)

    static PatternSpec copies_of(Graph h0, u32 k);
    static PatternSpec multiset_of(std::vector<Graph> graphs);
    static PatternSpec cycles_of(u32 k, u32 l);
    static PatternSpec paths_of(u32 k, u32 l, bool directed = false);
    static PatternSpec forest_of(Graph forest, u32 k = 1);
    static PatternSpec anchored_path_of(u32 edge_count, bool directed = false);
};

struct Pattern {
    Graph h;
    TreeDecomposition td;
    // Anchored-path endpoints as pattern vertices; 0 when not applicable.
    u32 first_vertex = 0;
    u32 last_vertex = 0;
};

// Throws domain_error for bad parameters, guard_error for oversized
// explicit components. The result always validates.
Pattern build_pattern(const PatternSpec& spec);

} // namespace ccg
