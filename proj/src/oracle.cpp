#include "ccg/oracle.hpp"

#include <algorithm>
#include <functional>

namespace ccg::oracle {

namespace {

void guard_host(const Graph& g) {
    if (g.vertex_count() > 10)
        throw guard_error("oracle guarded to hosts with at most 10 vertices");
}

void guard_param(u64 value, u64 cap, const char* what) {
    if (value > cap)
        throw guard_error(std::string("oracle guarded to ") + what + " <= " + std::to_string(cap));
}

// Lexicographically first injective homomorphism via plain backtracking.
std::optional<Embedding> embed_impl(const Graph& h, const Graph& g,
                                    const std::vector<u32>& anchor) {
    const u32 hn = h.vertex_count();
    const u32 gn = g.vertex_count();
    if (hn > gn) return std::nullopt;
    std::vector<u32> assign(hn + 1, 0);
    std::vector<bool> used(gn + 1, false);
    std::function<bool(u32)> rec = [&](u32 u) -> bool {
        if (u > hn) return true;
        for (u32 host = 1; host <= gn; ++host) {
            if (used[host]) continue;
            if (anchor[u] && anchor[u] != host) continue;
            bool ok = true;
            for (u32 v = 1; v < u && ok; ++v) {
                if (h.directed()) {
                    if (h.has_edge(u, v) && !g.has_edge(host, assign[v])) ok = false;
                    if (h.has_edge(v, u) && !g.has_edge(assign[v], host)) ok = false;
                } else if (h.has_edge(u, v)) {
                    ok = g.directed() ? g.has_undirected(host, assign[v])
                                      : g.has_edge(host, assign[v]);
                }
            }
            if (!ok) continue;
            assign[u] = host;
            used[host] = true;
            if (rec(u + 1)) return true;
            used[host] = false;
            assign[u] = 0;
        }
        return false;
    };
    if (!rec(1)) return std::nullopt;
    return Embedding{assign};
}

template <typename Accept>
std::optional<std::vector<u32>> first_subset_of(u32 n, u64 max_size, Accept&& accept) {
    std::vector<u32> pool;
    for (u32 v = 1; v <= n; ++v) pool.push_back(v);
    const u64 limit = std::min<u64>(max_size, n);
    for (u64 size = 0; size <= limit; ++size) {
        std::vector<u32> idx(size);
        for (u64 i = 0; i < size; ++i) idx[i] = static_cast<u32>(i);
        while (true) {
            std::vector<u32> chosen;
            for (u64 i = 0; i < size; ++i) chosen.push_back(pool[idx[i]]);
            if (accept(chosen)) return chosen;
            if (size == 0) break;
            i64 pos = static_cast<i64>(size) - 1;
            while (pos >= 0 && idx[pos] == n - (size - static_cast<u64>(pos))) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (u64 i = static_cast<u64>(pos) + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

u64 covered_count(const Graph& g, const std::vector<u32>& chosen) {
    u64 covered = 0;
    for (const auto& [u, v] : g.edges()) {
        bool hit = false;
        for (u32 x : chosen)
            if (x == u || x == v) {
                hit = true;
                break;
            }
        if (hit) ++covered;
    }
    return covered;
}

CoverWitness cover_witness(const Graph& g, std::vector<u32> vertices) {
    CoverWitness w;
    std::sort(vertices.begin(), vertices.end());
    w.vertices = std::move(vertices);
    for (const auto& [u, v] : g.edges())
        if (std::binary_search(w.vertices.begin(), w.vertices.end(), u) ||
            std::binary_search(w.vertices.begin(), w.vertices.end(), v))
            w.covered.push_back({u, v});
    return w;
}

// All edit sets of size <= budget over the vertex pairs, ascending size then
// lexicographic; yields the edited graph.
template <typename Accept>
std::optional<EditSet> first_edit_set(const Graph& g, u64 budget, Accept&& accept) {
    std::vector<std::pair<u32, u32>> pairs;
    for (u32 u = 1; u <= g.vertex_count(); ++u)
        for (u32 v = u + 1; v <= g.vertex_count(); ++v) pairs.push_back({u, v});
    const u64 total = pairs.size();
    for (u64 size = 0; size <= std::min<u64>(budget, total); ++size) {
        std::vector<u64> idx(size);
        for (u64 i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            EditSet edits;
            for (u64 i = 0; i < size; ++i) {
                auto [u, v] = pairs[idx[i]];
                if (g.has_edge(u, v))
                    edits.deletions.push_back({u, v});
                else
                    edits.additions.push_back({u, v});
            }
            if (accept(edits)) return edits;
            if (size == 0) break;
            i64 pos = static_cast<i64>(size) - 1;
            while (pos >= 0 && idx[pos] == total - (size - static_cast<u64>(pos))) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (u64 i = static_cast<u64>(pos) + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Embedding> embed(const Graph& h, const Graph& g,
                               const std::vector<std::pair<u32, u32>>& anchors) {
    guard_host(g);
    std::vector<u32> anchor(h.vertex_count() + 1, 0);
    for (const auto& [pv, host] : anchors) {
        if (pv == 0 || pv > h.vertex_count() || host == 0 || host > g.vertex_count())
            throw domain_error("oracle anchor out of range");
        if (anchor[pv] && anchor[pv] != host) return std::nullopt;
        anchor[pv] = host;
    }
    return embed_impl(h, g, anchor);
}

bool distance(const Graph& g, u32 s, u32 t, u32 d) {
    guard_host(g);
    auto dist = bfs_distances(g, s, /*ignore_direction=*/false);
    return dist[t] != ~u32{0} && dist[t] <= d;
}

bool k_path(const Graph& g, u32 k) {
    guard_host(g);
    guard_param(k, 10, "path length");
    if (k == 0) return true;
    if (k > g.vertex_count()) return false;
    std::vector<bool> used(g.vertex_count() + 1, false);
    std::function<bool(u32, u32)> rec = [&](u32 v, u32 len) -> bool {
        if (len == k) return true;
        const auto& next = g.neighbors(v);
        for (u32 w : next) {
            if (used[w]) continue;
            used[w] = true;
            if (rec(w, len + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    for (u32 v = 1; v <= g.vertex_count(); ++v) {
        used[v] = true;
        if (rec(v, 1)) return true;
        used[v] = false;
    }
    return false;
}

bool matching(const Graph& g, u32 k) {
    guard_host(g);
    guard_param(k, 5, "matching size");
    std::function<bool(u32, u32, std::vector<bool>&)> rec =
        [&](u32 from, u32 need, std::vector<bool>& used) -> bool {
        if (need == 0) return true;
        const auto& edges = g.edges();
        for (u32 e = from; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            if (used[u] || used[v]) continue;
            used[u] = used[v] = true;
            if (rec(e + 1, need - 1, used)) return true;
            used[u] = used[v] = false;
        }
        return false;
    };
    std::vector<bool> used(g.vertex_count() + 1, false);
    return rec(0, k, used);
}

std::optional<Embedding> pack(const Graph& g, const std::vector<Graph>& components) {
    guard_host(g);
    u32 total = 0;
    for (const auto& c : components) total += c.vertex_count();
    Graph uni(total, false);
    u32 offset = 0;
    for (const auto& c : components) {
        for (const auto& [u, v] : c.edges()) uni.add_edge(offset + u, offset + v);
        offset += c.vertex_count();
    }
    return embed(uni, g, {});
}

std::optional<CoverWitness> vertex_cover(const Graph& g, u64 k) {
    guard_host(g);
    guard_param(k, 4, "cover budget");
    auto hit = first_subset_of(g.vertex_count(), k, [&](const std::vector<u32>& chosen) {
        return covered_count(g, chosen) == g.edge_count();
    });
    if (!hit) return std::nullopt;
    return cover_witness(g, std::move(*hit));
}

std::optional<CoverWitness> partial_vertex_cover(const Graph& g, u64 k, u64 t) {
    guard_host(g);
    guard_param(k, 4, "cover budget");
    guard_param(t, 4, "coverage target");
    auto hit = first_subset_of(g.vertex_count(), k, [&](const std::vector<u32>& chosen) {
        return covered_count(g, chosen) >= t;
    });
    if (!hit) return std::nullopt;
    return cover_witness(g, std::move(*hit));
}

std::optional<CoverWitness> exact_partial_vertex_cover(const Graph& g, u64 t) {
    guard_host(g);
    guard_param(t, 5, "coverage target");
    auto hit = first_subset_of(g.vertex_count(), g.vertex_count(),
                               [&](const std::vector<u32>& chosen) {
                                   return covered_count(g, chosen) == t;
                               });
    if (!hit) return std::nullopt;
    return cover_witness(g, std::move(*hit));
}

std::optional<ClusterSolution> cluster_editing(const Graph& g, u64 k,
                                               std::optional<u32> cluster_count) {
    guard_host(g);
    guard_param(k, 3, "edit budget");
    auto accept = [&](const EditSet& edits) {
        Graph edited = apply_edits(g, edits);
        auto comps = connected_components(edited);
        if (cluster_count && comps.size() != *cluster_count) return false;
        for (const auto& comp : comps)
            if (!is_clique(edited, comp)) return false;
        return true;
    };
    auto edits = first_edit_set(g, k, accept);
    if (!edits) return std::nullopt;
    ClusterSolution sol;
    sol.edits = *edits;
    sol.clusters = connected_components(apply_edits(g, *edits));
    return sol;
}

std::optional<EditSet> p_partite_editing(const Graph& g, u64 k, u32 p) {
    guard_host(g);
    guard_param(k, 3, "edit budget");
    std::vector<u32> everything;
    for (u32 v = 1; v <= g.vertex_count(); ++v) everything.push_back(v);
    return first_edit_set(g, k, [&](const EditSet& edits) {
        return is_complete_multipartite(apply_edits(g, edits), everything, p);
    });
}

std::optional<ClusterSolution> multipartite_cluster_editing(const Graph& g, u64 k,
                                                            const std::vector<u32>& parts) {
    guard_host(g);
    guard_param(k, 3, "edit budget");
    auto accept = [&](const EditSet& edits) {
        Graph edited = apply_edits(g, edits);
        auto comps = connected_components(edited);
        if (comps.size() != parts.size()) return false;
        std::vector<bool> taken(parts.size(), false);
        std::function<bool(size_t)> match = [&](size_t i) -> bool {
            if (i == comps.size()) return true;
            for (size_t j = 0; j < parts.size(); ++j) {
                if (taken[j] || !is_complete_multipartite(edited, comps[i], parts[j])) continue;
                taken[j] = true;
                if (match(i + 1)) return true;
                taken[j] = false;
            }
            return false;
        };
        return match(0);
    };
    auto edits = first_edit_set(g, k, accept);
    if (!edits) return std::nullopt;
    ClusterSolution sol;
    sol.edits = *edits;
    sol.clusters = connected_components(apply_edits(g, *edits));
    return sol;
}

std::optional<CutWitness> cut(const Graph& g, u64 k, u32 l, CutMode mode,
                              std::optional<u32> terminal) {
    guard_host(g);
    guard_param(k, 4, "separator budget");
    guard_param(l, 4, "separated size");
    const u32 n = g.vertex_count();
    for (u64 mask = 1; mask < (u64{1} << n); ++mask) {
        std::vector<u32> x;
        for (u32 v = 1; v <= n; ++v)
            if ((mask >> (v - 1)) & 1) x.push_back(v);
        if (mode == CutMode::connected_exact) {
            if (x.size() != l) continue;
        } else {
            if (x.size() <= 1 || x.size() > l) continue;
        }
        if (terminal && !std::binary_search(x.begin(), x.end(), *terminal)) continue;
        if (mode == CutMode::connected_exact) {
            std::vector<bool> inside(n + 1, false);
            for (u32 v : x) inside[v] = true;
            std::vector<u32> stack{x[0]};
            std::vector<bool> seen(n + 1, false);
            seen[x[0]] = true;
            u32 reached = 0;
            while (!stack.empty()) {
                u32 v = stack.back();
                stack.pop_back();
                ++reached;
                for (u32 w : g.neighbors(v))
                    if (inside[w] && !seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
            }
            if (reached != x.size()) continue;
        }
        std::vector<u32> s;
        std::vector<bool> inside(n + 1, false);
        for (u32 v : x) inside[v] = true;
        for (u32 v : x)
            for (u32 w : g.neighbors(v))
                if (!inside[w]) s.push_back(w);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.size() > k) continue;
        CutWitness w;
        w.x = x;
        w.s = s;
        std::vector<bool> taken(n + 1, false);
        for (u32 v : x) taken[v] = true;
        for (u32 v : s) taken[v] = true;
        for (u32 v = 1; v <= n; ++v)
            if (!taken[v]) w.y.push_back(v);
        return w;
    }
    return std::nullopt;
}

std::optional<BallsWitness> scattered_balls(const Graph& g, u32 k, u32 r,
                                            const LocalPredicate& pred) {
    guard_host(g);
    guard_param(k, 4, "center count");
    guard_param(r, 4, "radius");
    std::vector<u32> candidates;
    for (u32 v = 1; v <= g.vertex_count(); ++v) {
        BallView view = ball(g, v, r);
        if (pred(view.graph, view.center)) candidates.push_back(v);
    }
    std::vector<std::vector<u32>> dist;
    for (u32 v = 0; v <= g.vertex_count(); ++v)
        dist.push_back(v == 0 ? std::vector<u32>()
                              : bfs_distances(g, v, /*ignore_direction=*/true));
    std::vector<u32> chosen;
    std::function<bool(size_t)> rec = [&](size_t from) -> bool {
        if (chosen.size() == k) return true;
        for (size_t i = from; i < candidates.size(); ++i) {
            u32 c = candidates[i];
            bool ok = true;
            for (u32 prev : chosen) {
                u32 d = dist[prev][c];
                if (d != ~u32{0} && d <= 2 * r) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(c);
            if (rec(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    BallsWitness w;
    w.centers = chosen;
    w.radius = r;
    return w;
}

} // namespace ccg::oracle
