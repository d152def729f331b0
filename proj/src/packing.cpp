#include "ccg/packing.hpp"

#include "ccg/pattern.hpp"

namespace ccg {

namespace {

PackResult run_pattern(const Graph& g, const PatternSpec& spec, const RunOptions& opt) {
    Pattern pattern = build_pattern(spec);
    EmbedResult er = embed(pattern, g, {}, opt);
    PackResult result;
    result.found = er.found;
    result.witness = std::move(er.witness);
    result.pattern = std::move(pattern.h);
    result.stats = er.stats;
    return result;
}

} // namespace

PackResult pack(const Graph& g, const std::vector<Graph>& components, const RunOptions& opt) {
    if (components.empty()) throw domain_error("packing multiset must be nonempty");
    for (const auto& c : components)
        if (c.vertex_count() > 5)
            throw guard_error("packing components are limited to 5 vertices each");
    return run_pattern(g, PatternSpec::multiset_of(components), opt);
}

PackResult pack_cycles(const Graph& g, u32 k, u32 l, const RunOptions& opt) {
    if (l < 3) throw domain_error("cycle length must be at least 3");
    return run_pattern(g, PatternSpec::cycles_of(k, l), opt);
}

PackResult pack_paths(const Graph& g, u32 k, u32 l, const RunOptions& opt) {
    return run_pattern(g, PatternSpec::paths_of(k, l), opt);
}

PackResult pack_forest(const Graph& g, const Graph& forest, u32 k, const RunOptions& opt) {
    return run_pattern(g, PatternSpec::forest_of(forest, k), opt);
}

} // namespace ccg
