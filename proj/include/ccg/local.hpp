#pragma once

#include <functional>
#include <optional>

#include "ccg/coloring.hpp"
#include "ccg/graph.hpp"
#include "ccg/parallel.hpp"
#include "ccg/witness.hpp"

namespace ccg {

// Pure function of the isomorphism type of (induced ball, center).
using LocalPredicate = std::function<bool(const Graph& ball, u32 center)>;

struct LocalResult {
    bool found = false;
    std::optional<BallsWitness> witness;
    SearchStats stats;
    u32 ball_bound = 0;          // M: degree-based ball size bound
    FamilyParams family;         // (n, min(M*k, n), k+1) family actually used
};

// k centers with pairwise distance > 2r whose r-balls satisfy the predicate,
// found by searching colorings where each wanted ball is monochromatic in its
// own color (color k+1 is background). Degree-bounded machinery: callers
// supply the local predicate and radius directly.
LocalResult scattered_balls(const Graph& g, u32 k, u32 r, const LocalPredicate& pred,
                            const RunOptions& opt = {});

} // namespace ccg
