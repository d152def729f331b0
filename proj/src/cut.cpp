#include "ccg/cut.hpp"

#include <algorithm>
#include <chrono>

#include "twocolor.hpp"

namespace ccg {

namespace {

using Clock = std::chrono::steady_clock;

double since_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool bit(u64 mask, u32 v) { return (mask >> (v - 1)) & 1; }

struct BlueComponent {
    std::vector<u32> vertices;
    std::vector<u32> boundary;   // outside neighbors (orange by maximality)
};

// Blue component of start, abandoned once it outgrows cap.
std::optional<BlueComponent> explore_blue(const Graph& g, u64 blue_mask, u32 start, u64 cap) {
    if (!bit(blue_mask, start)) return std::nullopt;
    std::vector<u32> stack{start};
    std::vector<u32> comp;
    std::vector<bool> seen(g.vertex_count() + 1, false);
    seen[start] = true;
    while (!stack.empty()) {
        u32 v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        if (comp.size() > cap) return std::nullopt;
        for (u32 w : g.neighbors(v))
            if (bit(blue_mask, w) && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    BlueComponent out;
    std::sort(comp.begin(), comp.end());
    std::vector<bool> inside(g.vertex_count() + 1, false);
    for (u32 v : comp) inside[v] = true;
    for (u32 v : comp)
        for (u32 w : g.neighbors(v))
            if (!inside[w]) out.boundary.push_back(w);
    std::sort(out.boundary.begin(), out.boundary.end());
    out.boundary.erase(std::unique(out.boundary.begin(), out.boundary.end()), out.boundary.end());
    out.vertices = std::move(comp);
    return out;
}

CutWitness make_witness(const Graph& g, std::vector<u32> x, std::vector<u32> s) {
    CutWitness w;
    std::sort(x.begin(), x.end());
    std::sort(s.begin(), s.end());
    std::vector<bool> taken(g.vertex_count() + 1, false);
    for (u32 v : x) taken[v] = true;
    for (u32 v : s) taken[v] = true;
    for (u32 v = 1; v <= g.vertex_count(); ++v)
        if (!taken[v]) w.y.push_back(v);
    w.x = std::move(x);
    w.s = std::move(s);
    return w;
}

// Orange = separator color; blue = bits NOT set (mask counts orange so the
// all-blue coloring is member index zero).
std::optional<CutWitness> eval_connected(const Graph& g, u64 k, u32 l,
                                         std::optional<u32> terminal, u64 orange_mask) {
    const u32 n = g.vertex_count();
    u64 blue_mask = ~orange_mask;
    std::vector<bool> handled(n + 1, false);
    for (u32 x = 1; x <= n; ++x) {
        if (terminal && *terminal != x) continue;
        if (!bit(blue_mask, x) || handled[x]) continue;
        auto comp = explore_blue(g, blue_mask, x, l);
        if (!comp) continue;
        for (u32 v : comp->vertices) handled[v] = true;
        if (comp->vertices.size() == l && comp->boundary.size() <= k)
            return make_witness(g, comp->vertices, comp->boundary);
    }
    return std::nullopt;
}

std::optional<CutWitness> eval_at_most(const Graph& g, u64 k, u32 l, std::optional<u32> terminal,
                                       u64 orange_mask) {
    const u32 n = g.vertex_count();
    u64 blue_mask = ~orange_mask;
    std::vector<BlueComponent> comps;
    std::vector<bool> handled(n + 1, false);
    for (u32 x = 1; x <= n; ++x) {
        if (!bit(blue_mask, x) || handled[x]) continue;
        auto comp = explore_blue(g, blue_mask, x, n);
        for (u32 v : comp->vertices) handled[v] = true;
        comps.push_back(std::move(*comp));
    }
    // (a) one component of size 2..l with a small boundary
    for (const auto& comp : comps) {
        if (terminal &&
            !std::binary_search(comp.vertices.begin(), comp.vertices.end(), *terminal))
            continue;
        if (comp.vertices.size() >= 2 && comp.vertices.size() <= l &&
            comp.boundary.size() <= k)
            return make_witness(g, comp.vertices, comp.boundary);
    }
    // (b) combine two components when no single one qualifies. If a valid X
    // exists and no part of it has size >= 2 on its own (or the terminal's
    // part is a singleton), a second part can be borrowed: its boundary stays
    // inside S. Without a terminal two singletons always suffice; with one,
    // the terminal's singleton pairs with any component of size <= l-1.
    auto combined = [&](const BlueComponent& a,
                        const BlueComponent& b) -> std::optional<CutWitness> {
        std::vector<u32> boundary = a.boundary;
        boundary.insert(boundary.end(), b.boundary.begin(), b.boundary.end());
        std::sort(boundary.begin(), boundary.end());
        boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
        if (boundary.size() > k) return std::nullopt;
        std::vector<u32> x = a.vertices;
        x.insert(x.end(), b.vertices.begin(), b.vertices.end());
        return make_witness(g, std::move(x), std::move(boundary));
    };
    if (terminal) {
        const BlueComponent* own = nullptr;
        for (const auto& comp : comps)
            if (comp.vertices.size() == 1 && comp.vertices[0] == *terminal) own = &comp;
        if (!own) return std::nullopt;
        for (const auto& comp : comps) {
            if (&comp == own || comp.vertices.size() > static_cast<size_t>(l) - 1) continue;
            if (auto w = combined(*own, comp)) return w;
        }
        return std::nullopt;
    }
    std::vector<const BlueComponent*> singletons;
    for (const auto& comp : comps)
        if (comp.vertices.size() == 1) singletons.push_back(&comp);
    for (size_t i = 0; i < singletons.size(); ++i)
        for (size_t j = i + 1; j < singletons.size(); ++j)
            if (auto w = combined(*singletons[i], *singletons[j])) return w;
    return std::nullopt;
}

CutResult run_cut(const Graph& g, u64 k, u32 l, std::optional<u32> terminal, bool connected,
                  const RunOptions& opt) {
    if (g.directed()) throw domain_error("cutting problems require undirected graphs");
    if (connected && l < 1) throw domain_error("separated set size must be positive");
    if (!connected && l < 2) throw domain_error("at-most mode needs l >= 2");
    if (terminal && (*terminal == 0 || *terminal > g.vertex_count()))
        throw domain_error("terminal vertex out of range");
    auto start = Clock::now();
    CutResult result;
    result.stats.threads = resolve_threads(opt.threads);
    result.stats.family_size = "0";
    const u32 n = g.vertex_count();
    // connected mode needs exactly l vertices; at-most mode needs at least 2
    if (n == 0 || (connected && l > n) || (!connected && n < 2)) {
        result.stats.millis = since_ms(start);
        return result;
    }

    auto accept = [&](u64 mask) {
        return connected ? eval_connected(g, k, l, terminal, mask).has_value()
                         : eval_at_most(g, k, l, terminal, mask).has_value();
    };
    auto scan = detail::two_color_search(n, static_cast<u64>(k) + l, opt, accept);
    detail::fill_stats(result.stats, scan);
    if (scan.hit) {
        auto witness = connected ? eval_connected(g, k, l, terminal, scan.hit->second)
                                 : eval_at_most(g, k, l, terminal, scan.hit->second);
        if (!witness) throw std::logic_error("cut witness pass lost the solution");
        auto mode = connected ? CutMode::connected_exact : CutMode::at_most;
        if (auto err = check_cut(g, *witness, k, l, mode, terminal))
            throw std::logic_error("cut witness failed validation: " + *err);
        result.found = true;
        result.witness = std::move(witness);
    }
    result.stats.millis = since_ms(start);
    return result;
}

} // namespace

CutResult cut_connected(const Graph& g, u64 k, u32 l, std::optional<u32> terminal,
                        const RunOptions& opt) {
    return run_cut(g, k, l, terminal, true, opt);
}

CutResult cut_at_most(const Graph& g, u64 k, u32 l, std::optional<u32> terminal,
                      const RunOptions& opt) {
    return run_cut(g, k, l, terminal, false, opt);
}

} // namespace ccg
