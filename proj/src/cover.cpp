#include "ccg/cover.hpp"

#include <algorithm>
#include <chrono>

#include "ccg/coloring.hpp"

namespace ccg {

namespace {

using Clock = std::chrono::steady_clock;

double since_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_undirected(const Graph& g) {
    if (g.directed()) throw domain_error("covering problems require undirected graphs");
}

CoverWitness witness_for(const Graph& g, std::vector<u32> vertices) {
    CoverWitness w;
    std::sort(vertices.begin(), vertices.end());
    w.vertices = std::move(vertices);
    for (const auto& [u, v] : g.edges())
        if (std::binary_search(w.vertices.begin(), w.vertices.end(), u) ||
            std::binary_search(w.vertices.begin(), w.vertices.end(), v))
            w.covered.push_back({u, v});
    return w;
}

// Ascending-size lexicographic subset enumeration with early exit.
template <typename Accept>
std::optional<std::vector<u32>> first_subset(const std::vector<u32>& pool, u64 max_size,
                                             Accept&& accept) {
    const u64 limit = std::min<u64>(max_size, pool.size());
    std::vector<u32> chosen;
    for (u64 size = 0; size <= limit; ++size) {
        std::vector<u32> idx(size);
        for (u64 i = 0; i < size; ++i) idx[i] = static_cast<u32>(i);
        while (true) {
            chosen.clear();
            for (u64 i = 0; i < size; ++i) chosen.push_back(pool[idx[i]]);
            if (accept(chosen)) return chosen;
            if (size == 0) break;
            i64 pos = static_cast<i64>(size) - 1;
            while (pos >= 0 && idx[pos] == pool.size() - (size - static_cast<u64>(pos))) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (u64 i = static_cast<u64>(pos) + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace

Kernel buss_kernel(const Graph& g, u64 k) {
    require_undirected(g);
    Kernel kernel;
    const u32 n = g.vertex_count();
    std::vector<bool> forced_bit(n + 1, false);
    for (u32 v = 1; v <= n; ++v)
        if (g.degree(v) >= k + 1) {
            forced_bit[v] = true;
            kernel.forced.push_back(v);
        }
    kernel.remaining_budget = static_cast<i64>(k) - static_cast<i64>(kernel.forced.size());

    // |forced| > k rejects the instance (threshold test).
    std::vector<bool> bits(forced_bit.begin() + 1, forced_bit.end());
    if (n > 0 && threshold(bits, static_cast<u32>(std::min<u64>(k + 1, n + 1)))) {
        kernel.verdict = Kernel::Verdict::rejected_too_many_forced;
        return kernel;
    }

    std::vector<u32> residual_vertices;
    for (u32 v = 1; v <= n; ++v) {
        if (forced_bit[v]) continue;
        bool isolated = true;
        for (u32 w : g.neighbors(v))
            if (!forced_bit[w]) {
                isolated = false;
                break;
            }
        if (!isolated) residual_vertices.push_back(v);
    }
    std::vector<bool> residual_bits(n, false);
    for (u32 v : residual_vertices) residual_bits[v - 1] = true;
    u64 cutoff = k * (k + 1) + 1;
    if (n > 0 && cutoff <= n && threshold(residual_bits, static_cast<u32>(cutoff))) {
        kernel.verdict = Kernel::Verdict::rejected_residual_too_large;
        return kernel;
    }

    std::vector<u32> local(n + 1, 0);
    for (u32 i = 0; i < residual_vertices.size(); ++i) local[residual_vertices[i]] = i + 1;
    Graph residual(static_cast<u32>(residual_vertices.size()), false);
    for (const auto& [u, v] : g.edges())
        if (local[u] && local[v]) residual.add_edge(local[u], local[v]);
    kernel.residual = std::move(residual);
    kernel.residual_vertices = std::move(residual_vertices);
    return kernel;
}

CoverResult vertex_cover(const Graph& g, u64 k, const RunOptions& opt) {
    require_undirected(g);
    auto start = Clock::now();
    CoverResult result;
    result.stats.threads = resolve_threads(opt.threads);
    result.stats.family_size = "0";

    Kernel kernel = buss_kernel(g, k);
    result.kernel_verdict = kernel.verdict;
    if (kernel.verdict != Kernel::Verdict::kernelized) {
        result.stats.millis = since_ms(start);
        return result;
    }
    const Graph& residual = kernel.residual;
    std::vector<u32> pool;
    for (u32 v = 1; v <= residual.vertex_count(); ++v) pool.push_back(v);
    auto covers_all = [&](const std::vector<u32>& chosen) {
        for (const auto& [u, v] : residual.edges()) {
            bool hit = false;
            for (u32 x : chosen)
                if (x == u || x == v) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    };
    auto chosen = kernel.remaining_budget < 0
                      ? std::nullopt
                      : first_subset(pool, static_cast<u64>(kernel.remaining_budget), covers_all);
    if (chosen) {
        std::vector<u32> vertices = kernel.forced;
        for (u32 local : *chosen) vertices.push_back(kernel.residual_vertices[local - 1]);
        CoverWitness w = witness_for(g, std::move(vertices));
        if (auto err = check_cover(g, w, CoverMode::all_edges, k, 0))
            throw std::logic_error("vertex cover witness failed validation: " + *err);
        result.found = true;
        result.witness = std::move(w);
    }
    result.stats.millis = since_ms(start);
    return result;
}

CoverResult partial_vertex_cover(const Graph& g, u64 k, u64 t, const RunOptions& opt) {
    require_undirected(g);
    if (k == 0 || t == 0) throw domain_error("partial vertex cover needs k >= 1 and t >= 1");
    auto start = Clock::now();
    CoverResult result;
    result.stats.threads = resolve_threads(opt.threads);
    result.stats.family_size = "0";

    // A single vertex of degree >= t already covers enough.
    for (u32 v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) >= t) {
            CoverWitness w = witness_for(g, {v});
            if (auto err = check_cover(g, w, CoverMode::at_least, k, t))
                throw std::logic_error("partial cover witness failed validation: " + *err);
            result.found = true;
            result.witness = std::move(w);
            result.stats.millis = since_ms(start);
            return result;
        }

    // Max degree < t from here on.
    const auto& edges = g.edges();
    const u32 m = static_cast<u32>(edges.size());
    if (m < t) {
        result.stats.millis = since_ms(start);
        return result;
    }
    FamilyParams params = family_params(m, static_cast<u32>(t), static_cast<u32>(t), opt.multiplier);
    result.stats.family_size = family_size_decimal(params);
    result.stats.family_size_fits = family_size_fits_u64(params);
    result.stats.family_size_u64 = result.stats.family_size_fits ? family_size(params) : 0;
    result.stats.family_blocks = block_count(params);

    std::vector<u32> pool;
    for (u32 v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) > 0) pool.push_back(v);

    // Per block: some member covers >= t color classes iff <= k vertices
    // reach >= t distinct edge cells (omega routes one cell per color).
    auto eval = [&](u64 block_index) -> std::pair<std::optional<std::vector<u32>>, u64> {
        Block blk = block_at(params, block_index);
        std::vector<u64> vertex_cells(g.vertex_count() + 1, 0);   // cells < t^2 <= 64 bits? t <= 8
        const bool wide = params.cells() > 64;
        std::vector<std::vector<u32>> vertex_cell_lists;
        if (wide) vertex_cell_lists.assign(g.vertex_count() + 1, {});
        for (u32 e = 0; e < m; ++e) {
            u32 cell = cell_of(params, blk, e + 1);
            auto [u, v] = edges[e];
            if (wide) {
                vertex_cell_lists[u].push_back(cell);
                vertex_cell_lists[v].push_back(cell);
            } else {
                vertex_cells[u] |= u64{1} << cell;
                vertex_cells[v] |= u64{1} << cell;
            }
        }
        auto reaches = [&](const std::vector<u32>& chosen) {
            if (wide) {
                std::vector<u32> cells;
                for (u32 v : chosen)
                    cells.insert(cells.end(), vertex_cell_lists[v].begin(),
                                 vertex_cell_lists[v].end());
                std::sort(cells.begin(), cells.end());
                cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
                return cells.size() >= t;
            }
            u64 mask = 0;
            for (u32 v : chosen) mask |= vertex_cells[v];
            return static_cast<u64>(__builtin_popcountll(mask)) >= t;
        };
        auto found = first_subset(pool, k, reaches);
        return {std::move(found), 1};
    };
    auto outcome = run_first_success(block_count(params), opt, eval);
    result.stats.colorings_checked = outcome.work;
    if (outcome.hit) {
        CoverWitness w = witness_for(g, std::move(outcome.hit->second));
        if (auto err = check_cover(g, w, CoverMode::at_least, k, t))
            throw std::logic_error("partial cover witness failed validation: " + *err);
        result.found = true;
        result.witness = std::move(w);
    }
    result.stats.millis = since_ms(start);
    return result;
}

DegreeSplit degree_split(const Graph& g, u64 t) {
    require_undirected(g);
    DegreeSplit split;
    split.original_count = g.vertex_count();
    std::vector<bool> high(g.vertex_count() + 1, false);
    u32 extra = 0;
    for (u32 v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) > t) {
            high[v] = true;
            extra += g.degree(v);
        }
    std::vector<u32> labels;
    u32 next_red = g.vertex_count();
    // Pair each split edge with its origin, then sort into the canonical
    // order the Graph will report, so edge_origin[i] matches graph.edges()[i].
    std::vector<std::pair<std::pair<u32, u32>, std::pair<u32, u32>>> pairs;
    for (const auto& [u, v] : g.edges()) {
        u32 uu = high[u] ? ++next_red : u;
        u32 vv = high[v] ? ++next_red : v;
        pairs.push_back({{std::min(uu, vv), std::max(uu, vv)}, {u, v}});
    }
    for (u32 r = g.vertex_count() + 1; r <= next_red; ++r) labels.push_back(r);
    std::sort(pairs.begin(), pairs.end());
    Graph out(g.vertex_count() + extra, false);
    for (const auto& [e, origin] : pairs) {
        out.add_edge(e.first, e.second);
        split.edge_origin.push_back(origin);
    }
    out.set_labels(labels);
    split.graph = std::move(out);
    return split;
}

CoverResult exact_partial_vertex_cover(const Graph& g, u64 t, const RunOptions& opt) {
    require_undirected(g);
    auto start = Clock::now();
    CoverResult result;
    result.stats.threads = resolve_threads(opt.threads);
    result.stats.family_size = "0";

    if (t == 0) {
        CoverWitness w;   // empty set covers exactly zero edges
        result.found = true;
        result.witness = std::move(w);
        result.stats.millis = since_ms(start);
        return result;
    }
    if (g.edge_count() < t) {
        result.stats.millis = since_ms(start);
        return result;
    }

    DegreeSplit split = degree_split(g, t);
    const Graph& sg = split.graph;
    const auto& sedges = sg.edges();
    const u32 m = static_cast<u32>(sedges.size());

    FamilyParams params = family_params(m, static_cast<u32>(t), static_cast<u32>(t), opt.multiplier);
    result.stats.family_size = family_size_decimal(params);
    result.stats.family_size_fits = family_size_fits_u64(params);
    result.stats.family_size_u64 = result.stats.family_size_fits ? family_size(params) : 0;
    result.stats.family_blocks = block_count(params);

    // Non-red selectable vertices; each covers >= 1 and <= t edges, so |S| <= t.
    std::vector<u32> pool;
    for (u32 v = 1; v <= split.original_count; ++v)
        if (sg.degree(v) > 0) pool.push_back(v);
    std::vector<std::vector<u32>> incident(split.original_count + 1);
    for (u32 e = 0; e < m; ++e) {
        auto [u, v] = sedges[e];
        if (u <= split.original_count) incident[u].push_back(e);
        if (v <= split.original_count) incident[v].push_back(e);
    }

    auto eval = [&](u64 block_index) -> std::pair<std::optional<std::vector<u32>>, u64> {
        Block blk = block_at(params, block_index);
        std::vector<u32> cell_of_edge(m);
        for (u32 e = 0; e < m; ++e) cell_of_edge[e] = cell_of(params, blk, e + 1);
        auto exact_colorful = [&](const std::vector<u32>& chosen) {
            std::vector<u32> edge_ids;
            for (u32 v : chosen)
                edge_ids.insert(edge_ids.end(), incident[v].begin(), incident[v].end());
            std::sort(edge_ids.begin(), edge_ids.end());
            edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
            if (edge_ids.size() != t) return false;
            std::vector<u32> cells;
            for (u32 e : edge_ids) cells.push_back(cell_of_edge[e]);
            std::sort(cells.begin(), cells.end());
            return std::adjacent_find(cells.begin(), cells.end()) == cells.end();
        };
        auto found = first_subset(pool, t, exact_colorful);
        return {std::move(found), 1};
    };
    auto outcome = run_first_success(block_count(params), opt, eval);
    result.stats.colorings_checked = outcome.work;
    if (outcome.hit) {
        CoverWitness w = witness_for(g, std::move(outcome.hit->second));
        if (auto err = check_cover(g, w, CoverMode::exactly, 0, t))
            throw std::logic_error("exact partial cover witness failed validation: " + *err);
        result.found = true;
        result.witness = std::move(w);
    }
    result.stats.millis = since_ms(start);
    return result;
}

} // namespace ccg
