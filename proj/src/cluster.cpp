#include "ccg/cluster.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>

#include "twocolor.hpp"

namespace ccg {

namespace {

using Clock = std::chrono::steady_clock;
constexpr u64 kInfeasible = std::numeric_limits<u64>::max();

double since_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_undirected(const Graph& g) {
    if (g.directed()) throw domain_error("cluster editing requires undirected graphs");
}

bool bit(u64 mask, u32 v) { return (mask >> (v - 1)) & 1; }

u64 non_edges_within(const Graph& g, const std::vector<u32>& set) {
    u64 missing = 0;
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j)
            if (!g.has_edge(set[i], set[j])) ++missing;
    return missing;
}

u64 edges_between(const Graph& g, const std::vector<u32>& a, const std::vector<u32>& b) {
    u64 count = 0;
    for (u32 u : a)
        for (u32 v : b)
            if (g.has_edge(u, v)) ++count;
    return count;
}

// Outcome of the blue/orange evaluation of one coloring.
struct TableOutcome {
    bool reject = true;
    std::vector<std::vector<u32>> identified;   // partly modified clusters (closed nbhds of reps)
    std::vector<u32> leftovers;
    u64 m1 = 0;                                 // edits inside/between identified clusters
    u64 cross_leftover = 0;                     // deletions leftover <-> identified
    std::vector<u64> best_partition_cost;       // by block count; within-leftover edits only
};

TableOutcome eval_cluster_table(const Graph& g, u64 k, u64 orange_mask) {
    TableOutcome out;
    const u32 n = g.vertex_count();
    // Representatives: orange vertices with no smaller orange neighbor.
    std::vector<u32> reps;
    for (u32 v = 1; v <= n; ++v) {
        if (!bit(orange_mask, v)) continue;
        bool smaller = false;
        for (u32 w : g.neighbors(v))
            if (w < v && bit(orange_mask, w)) {
                smaller = true;
                break;
            }
        if (!smaller) reps.push_back(v);
    }
    std::vector<u32> owner(n + 1, 0);
    for (u32 d : reps) {
        std::vector<u32> cluster{d};
        for (u32 w : g.neighbors(d)) cluster.push_back(w);
        std::sort(cluster.begin(), cluster.end());
        for (u32 v : cluster) {
            if (owner[v]) return out;   // identified clusters overlap: dead coloring
            owner[v] = static_cast<u32>(out.identified.size()) + 1;
        }
        out.identified.push_back(std::move(cluster));
    }
    for (u32 v = 1; v <= n; ++v)
        if (!owner[v]) out.leftovers.push_back(v);
    if (out.leftovers.size() > 2 * k) return out;

    for (const auto& cluster : out.identified) out.m1 += non_edges_within(g, cluster);
    for (size_t i = 0; i < out.identified.size(); ++i)
        for (size_t j = i + 1; j < out.identified.size(); ++j)
            out.m1 += edges_between(g, out.identified[i], out.identified[j]);
    for (u32 v : out.leftovers)
        for (u32 w : g.neighbors(v))
            if (owner[w]) ++out.cross_leftover;

    // Min edits for every possible leftover block count (partition into
    // cliques: additions within blocks plus deletions across blocks).
    const size_t ln = out.leftovers.size();
    out.best_partition_cost.assign(ln + 1, kInfeasible);
    if (ln == 0) {
        out.best_partition_cost[0] = 0;
    } else {
        std::vector<u32> assign(ln, 0);
        std::function<void(size_t, u32)> rec = [&](size_t i, u32 used) {
            if (i == ln) {
                u64 cost = 0;
                for (size_t a = 0; a < ln; ++a)
                    for (size_t b = a + 1; b < ln; ++b) {
                        bool edge = g.has_edge(out.leftovers[a], out.leftovers[b]);
                        if (assign[a] == assign[b]) {
                            if (!edge) ++cost;
                        } else if (edge) {
                            ++cost;
                        }
                    }
                out.best_partition_cost[used] = std::min(out.best_partition_cost[used], cost);
                return;
            }
            for (u32 blockid = 0; blockid < used; ++blockid) {
                assign[i] = blockid;
                rec(i + 1, used);
            }
            assign[i] = used;
            rec(i + 1, used + 1);
        };
        rec(0, 0);
    }
    out.reject = false;
    return out;
}

// Exact target: identified + blocks == l. Many mode: any total <= 2k.
bool accept_outcome(const TableOutcome& out, u64 k, std::optional<u32> exact_l, u64 many_cap) {
    if (out.reject) return false;
    const u64 r = out.identified.size();
    for (u64 b = 0; b < out.best_partition_cost.size(); ++b) {
        if (out.best_partition_cost[b] == kInfeasible) continue;
        u64 total = out.m1 + out.cross_leftover + out.best_partition_cost[b];
        if (total > k) continue;
        if (exact_l) {
            if (r + b == *exact_l) return true;
        } else if (r + b <= many_cap && r + b >= 1) {
            return true;
        }
    }
    return false;
}

ClusterSolution build_solution(const Graph& g, u64 k, u64 orange_mask, std::optional<u32> exact_l,
                               u64 many_cap) {
    TableOutcome out = eval_cluster_table(g, k, orange_mask);
    const u64 r = out.identified.size();
    u64 chosen_b = kInfeasible;
    for (u64 b = 0; b < out.best_partition_cost.size(); ++b) {
        if (out.best_partition_cost[b] == kInfeasible) continue;
        u64 total = out.m1 + out.cross_leftover + out.best_partition_cost[b];
        if (total > k) continue;
        if (exact_l ? (r + b == *exact_l) : (r + b <= many_cap && r + b >= 1)) {
            chosen_b = b;
            break;
        }
    }
    if (chosen_b == kInfeasible) throw std::logic_error("cluster witness pass lost the solution");

    // First partition (enumeration order) achieving the recorded minimum.
    const size_t ln = out.leftovers.size();
    std::vector<u32> best_assign(ln, 0);
    if (ln > 0) {
        u64 want = out.best_partition_cost[chosen_b];
        bool found = false;
        std::vector<u32> assign(ln, 0);
        std::function<void(size_t, u32)> rec = [&](size_t i, u32 used) {
            if (found) return;
            if (i == ln) {
                if (used != chosen_b) return;
                u64 cost = 0;
                for (size_t a = 0; a < ln; ++a)
                    for (size_t b2 = a + 1; b2 < ln; ++b2) {
                        bool edge = g.has_edge(out.leftovers[a], out.leftovers[b2]);
                        if (assign[a] == assign[b2]) {
                            if (!edge) ++cost;
                        } else if (edge) {
                            ++cost;
                        }
                    }
                if (cost == want) {
                    best_assign = assign;
                    found = true;
                }
                return;
            }
            for (u32 blockid = 0; blockid < used && !found; ++blockid) {
                assign[i] = blockid;
                rec(i + 1, used);
            }
            if (found) return;
            assign[i] = used;
            rec(i + 1, used + 1);
        };
        rec(0, 0);
        if (!found) throw std::logic_error("cluster partition pass lost the solution");
    }

    ClusterSolution sol;
    sol.clusters = out.identified;
    for (u64 b = 0; b < chosen_b; ++b) {
        std::vector<u32> block;
        for (size_t i = 0; i < ln; ++i)
            if (best_assign[i] == b) block.push_back(out.leftovers[i]);
        sol.clusters.push_back(std::move(block));
    }
    // Edits follow wholesale from the partition.
    std::vector<u32> cluster_of(g.vertex_count() + 1, 0);
    for (u32 ci = 0; ci < sol.clusters.size(); ++ci)
        for (u32 v : sol.clusters[ci]) cluster_of[v] = ci + 1;
    for (u32 u = 1; u <= g.vertex_count(); ++u)
        for (u32 v = u + 1; v <= g.vertex_count(); ++v) {
            bool same = cluster_of[u] == cluster_of[v];
            bool edge = g.has_edge(u, v);
            if (same && !edge) sol.edits.additions.push_back({u, v});
            if (!same && edge) sol.edits.deletions.push_back({u, v});
        }
    u64 recount = out.m1 + out.cross_leftover + out.best_partition_cost[chosen_b];
    if (sol.edits.cost() != recount)
        throw std::logic_error("edit accounting mismatch between phases");
    return sol;
}

ClusterResult cluster_search(const Graph& g, u64 k, std::optional<u32> exact_l, u64 many_cap,
                             const RunOptions& opt) {
    ClusterResult result;
    result.stats.threads = resolve_threads(opt.threads);
    result.stats.family_size = "0";
    const u32 n = g.vertex_count();
    const u64 ell = exact_l ? *exact_l : many_cap;
    if (n == 0 || 2 * k + ell == 0) return result;

    auto accept = [&](u64 mask) {
        return accept_outcome(eval_cluster_table(g, k, mask), k, exact_l, many_cap);
    };
    auto scan = detail::two_color_search(n, 2 * k + ell, opt, accept);
    detail::fill_stats(result.stats, scan);
    if (scan.hit) {
        ClusterSolution sol = build_solution(g, k, scan.hit->second, exact_l, many_cap);
        if (auto err = check_cluster_solution(
                g, sol, k, exact_l ? std::optional<u64>(*exact_l) : std::nullopt))
            throw std::logic_error("cluster witness failed validation: " + *err);
        result.found = true;
        result.witness = std::move(sol);
    }
    return result;
}

// Vertices of components that already are cliques, by the local test: N[v]
// is a clique and every neighbor has the same closed neighborhood. (A pendant
// vertex is cliquish in the plain sense but fails the second condition.)
std::vector<bool> clique_component_vertices(const Graph& g) {
    const u32 n = g.vertex_count();
    std::vector<std::vector<u32>> closed(n + 1);
    for (u32 v = 1; v <= n; ++v) {
        closed[v] = g.neighbors(v);
        closed[v].push_back(v);
        std::sort(closed[v].begin(), closed[v].end());
    }
    std::vector<bool> in_clique(n + 1, false);
    for (u32 v = 1; v <= n; ++v) {
        if (!is_clique(g, closed[v])) continue;
        bool uniform = true;
        for (u32 w : g.neighbors(v))
            if (closed[w] != closed[v]) {
                uniform = false;
                break;
            }
        in_clique[v] = uniform;
    }
    return in_clique;
}

struct InducedView {
    Graph graph;
    std::vector<u32> to_host;
};

InducedView induce(const Graph& g, const std::vector<u32>& vertices) {
    InducedView view;
    std::vector<u32> local(g.vertex_count() + 1, 0);
    view.to_host = vertices;
    for (u32 i = 0; i < vertices.size(); ++i) local[vertices[i]] = i + 1;
    Graph sub(static_cast<u32>(vertices.size()), false);
    for (const auto& [u, v] : g.edges())
        if (local[u] && local[v]) sub.add_edge(local[u], local[v]);
    view.graph = std::move(sub);
    return view;
}

ClusterSolution map_back(const ClusterSolution& sub, const std::vector<u32>& to_host,
                         std::vector<std::vector<u32>> extra_clusters) {
    ClusterSolution sol;
    for (auto [u, v] : sub.edits.additions)
        sol.edits.additions.push_back({to_host[u - 1], to_host[v - 1]});
    for (auto [u, v] : sub.edits.deletions)
        sol.edits.deletions.push_back({to_host[u - 1], to_host[v - 1]});
    for (const auto& cluster : sub.clusters) {
        std::vector<u32> mapped;
        for (u32 v : cluster) mapped.push_back(to_host[v - 1]);
        std::sort(mapped.begin(), mapped.end());
        sol.clusters.push_back(std::move(mapped));
    }
    for (auto& c : extra_clusters) sol.clusters.push_back(std::move(c));
    return sol;
}

} // namespace

ClusterResult cluster_editing(const Graph& g, u64 k, u32 l, const RunOptions& opt) {
    require_undirected(g);
    if (l == 0) throw domain_error("cluster count must be positive");
    auto start = Clock::now();
    ClusterResult result = cluster_search(g, k, l, 0, opt);
    result.stats.millis = since_ms(start);
    return result;
}

ClusterResult many_cluster_editing(const Graph& g, u64 k, const RunOptions& opt) {
    require_undirected(g);
    auto start = Clock::now();
    ClusterResult result;
    result.stats.threads = resolve_threads(opt.threads);
    result.stats.family_size = "0";

    auto in_clique = clique_component_vertices(g);
    std::vector<u32> rest;
    for (u32 v = 1; v <= g.vertex_count(); ++v)
        if (!in_clique[v]) rest.push_back(v);
    std::vector<std::vector<u32>> aside;
    {
        std::vector<u32> aside_vertices;
        for (u32 v = 1; v <= g.vertex_count(); ++v)
            if (in_clique[v]) aside_vertices.push_back(v);
        InducedView clique_part = induce(g, aside_vertices);
        for (const auto& comp : connected_components(clique_part.graph)) {
            std::vector<u32> mapped;
            for (u32 v : comp) mapped.push_back(clique_part.to_host[v - 1]);
            aside.push_back(std::move(mapped));
        }
    }

    if (rest.empty()) {
        ClusterSolution sol;
        sol.clusters = std::move(aside);
        if (auto err = check_cluster_solution(g, sol, k, std::nullopt))
            throw std::logic_error("cluster witness failed validation: " + *err);
        result.found = true;
        result.witness = std::move(sol);
        result.stats.millis = since_ms(start);
        return result;
    }
    if (k == 0) {   // untouched non-clique components cannot become cliques
        result.stats.millis = since_ms(start);
        return result;
    }

    InducedView remainder = induce(g, rest);
    ClusterResult sub = cluster_search(remainder.graph, k, std::nullopt, 2 * k, opt);
    result.stats = sub.stats;
    result.stats.threads = resolve_threads(opt.threads);
    if (sub.found) {
        ClusterSolution sol = map_back(*sub.witness, remainder.to_host, std::move(aside));
        if (auto err = check_cluster_solution(g, sol, k, std::nullopt))
            throw std::logic_error("cluster witness failed validation: " + *err);
        result.found = true;
        result.witness = std::move(sol);
    }
    result.stats.millis = since_ms(start);
    return result;
}

ClusterResult cluster_editing_free_l(const Graph& g, u64 k, u32 l, const RunOptions& opt) {
    require_undirected(g);
    if (l == 0) throw domain_error("cluster count must be positive");
    auto start = Clock::now();
    ClusterResult result;
    result.stats.threads = resolve_threads(opt.threads);
    result.stats.family_size = "0";

    // Components in input order (the earliest vertex decides precedence).
    // A clique component is untouchable only above size k+1: splitting a
    // clique of size s needs at least s-1 deletions, and s-1 <= k is still
    // affordable. Of the touchable sizes, 2k copies each suffice (a solution
    // edits at most 2k components and same-size cliques are interchangeable).
    auto comps = connected_components(g);
    std::vector<std::vector<u32>> aside;
    std::vector<u32> kept;
    std::vector<u64> kept_of_size(g.vertex_count() + 1, 0);
    for (const auto& comp : comps) {
        if (is_clique(g, comp)) {
            if (comp.size() > k + 1) {
                aside.push_back(comp);
                continue;
            }
            if (kept_of_size[comp.size()] >= 2 * k) {
                aside.push_back(comp);
                continue;
            }
            ++kept_of_size[comp.size()];
        }
        kept.insert(kept.end(), comp.begin(), comp.end());
    }
    const u64 x = aside.size();
    if (static_cast<u64>(l) < x) {
        result.stats.millis = since_ms(start);
        return result;
    }
    // Remainder clusters are either touched by an edit (at most 2k) or kept
    // clique components (at most 2k of each size 1..k+1), so more than
    // 2k + 2k(k+1) remainder clusters refute the instance.
    const u64 l_eff = l - x;
    if (l_eff > 2 * k + 2 * k * (k + 1)) {
        result.stats.millis = since_ms(start);
        return result;
    }
    std::sort(kept.begin(), kept.end());
    if (kept.empty()) {
        if (l_eff == 0) {
            ClusterSolution sol;
            sol.clusters = std::move(aside);
            if (auto err = check_cluster_solution(g, sol, k, l))
                throw std::logic_error("cluster witness failed validation: " + *err);
            result.found = true;
            result.witness = std::move(sol);
        }
        result.stats.millis = since_ms(start);
        return result;
    }
    if (l_eff == 0) {
        result.stats.millis = since_ms(start);
        return result;
    }

    InducedView remainder = induce(g, kept);
    ClusterResult sub = cluster_search(remainder.graph, k, static_cast<u32>(l_eff), 0, opt);
    result.stats = sub.stats;
    result.stats.threads = resolve_threads(opt.threads);
    if (sub.found) {
        ClusterSolution sol = map_back(*sub.witness, remainder.to_host, std::move(aside));
        if (auto err = check_cluster_solution(g, sol, k, l))
            throw std::logic_error("cluster witness failed validation: " + *err);
        result.found = true;
        result.witness = std::move(sol);
    }
    result.stats.millis = since_ms(start);
    return result;
}

PartiteResult p_partite_editing(const Graph& g, u64 k, u32 p, bool p_is_parameter,
                                const RunOptions& opt) {
    require_undirected(g);
    if (p == 0) throw domain_error("part count must be positive");
    auto start = Clock::now();
    PartiteResult result;

    Graph co = complement(g);
    ClusterResult sub = p_is_parameter ? cluster_editing(co, k, p, opt)
                                       : cluster_editing_free_l(co, k, p, opt);
    result.stats = sub.stats;
    if (sub.found) {
        EditSet edits;
        edits.additions = sub.witness->edits.deletions;   // complement swaps the roles
        edits.deletions = sub.witness->edits.additions;
        Graph edited = apply_edits(g, edits);
        std::vector<u32> everything;
        for (u32 v = 1; v <= g.vertex_count(); ++v) everything.push_back(v);
        if (!is_complete_multipartite(edited, everything, p))
            throw std::logic_error("p-partite witness failed validation");
        result.found = true;
        result.witness = std::move(edits);
    }
    result.stats.millis = since_ms(start);
    return result;
}

namespace {

// --- multipartite ----------------------------------------------------------

struct MpContext {
    const Graph& g;
    u64 k;
    const std::vector<u32>& parts;
    // memoized per part count: min edits making a vertex set complete p-partite
    mutable std::vector<std::unordered_map<u64, u64>> memo_by_p;

    u64 partite_cost(const std::vector<u32>& set, u32 p) const {
        if (set.size() < p) return kInfeasible;
        if (p == 1) return set.size() == 1 ? 0 : kInfeasible;   // larger sets would disconnect
        u64 key = 0;
        for (u32 v : set) key |= u64{1} << (v - 1);
        if (memo_by_p.size() <= p) memo_by_p.resize(p + 1);
        auto it = memo_by_p[p].find(key);
        if (it != memo_by_p[p].end()) return it->second;
        u64 best = kInfeasible;
        std::vector<u32> assign(set.size(), 0);
        std::function<void(size_t, u32)> rec = [&](size_t i, u32 used) {
            if (i == set.size()) {
                if (used != p) return;
                u64 cost = 0;
                for (size_t a = 0; a < set.size(); ++a)
                    for (size_t b = a + 1; b < set.size(); ++b) {
                        bool edge = g.has_edge(set[a], set[b]);
                        if (assign[a] == assign[b]) {
                            if (edge) ++cost;   // inside a part: must go
                        } else if (!edge) {
                            ++cost;             // across parts: must appear
                        }
                    }
                best = std::min(best, cost);
                return;
            }
            if (used > p) return;
            for (u32 blockid = 0; blockid < used; ++blockid) {
                assign[i] = blockid;
                rec(i + 1, used);
            }
            if (used < p) {
                assign[i] = used;
                rec(i + 1, used + 1);
            }
        };
        rec(0, 0);
        memo_by_p[p].emplace(key, best);
        return best;
    }
};

// First partition (enumeration order) achieving the minimal p-partite cost.
std::vector<u32> best_partition(const MpContext& ctx, const std::vector<u32>& set, u32 p) {
    std::vector<u32> best_assign(set.size(), 0);
    if (p == 1) return best_assign;
    u64 best = kInfeasible;
    std::vector<u32> assign(set.size(), 0);
    std::function<void(size_t, u32)> rec = [&](size_t i, u32 used) {
        if (i == set.size()) {
            if (used != p) return;
            u64 cost = 0;
            for (size_t a = 0; a < set.size(); ++a)
                for (size_t b = a + 1; b < set.size(); ++b) {
                    bool edge = ctx.g.has_edge(set[a], set[b]);
                    if (assign[a] == assign[b]) {
                        if (edge) ++cost;
                    } else if (!edge) {
                        ++cost;
                    }
                }
            if (cost < best) {
                best = cost;
                best_assign = assign;
            }
            return;
        }
        if (used > p) return;
        for (u32 blockid = 0; blockid < used; ++blockid) {
            assign[i] = blockid;
            rec(i + 1, used);
        }
        if (used < p) {
            assign[i] = used;
            rec(i + 1, used + 1);
        }
    };
    rec(0, 0);
    return best_assign;
}

struct MpCandidate {
    std::vector<std::vector<u32>> clusters;
    u64 cost = kInfeasible;
};

// Evaluates one coloring; when out != nullptr the first feasible candidate is
// materialized as a solution.
bool eval_mp_table(const MpContext& ctx, u64 orange_mask, ClusterSolution* out) {
    const Graph& g = ctx.g;
    const u32 n = g.vertex_count();
    const u32 ell = static_cast<u32>(ctx.parts.size());

    std::vector<u32> oranges;
    for (u32 v = 1; v <= n; ++v)
        if (bit(orange_mask, v)) oranges.push_back(v);

    // Equivalence: adjacent or identical nonempty open neighborhood, closed
    // transitively. The nonemptiness requirement keeps isolated orange
    // vertices apart: they sit in distinct singleton clusters, yet share the
    // empty neighborhood.
    std::vector<u32> uf(oranges.size());
    for (u32 i = 0; i < uf.size(); ++i) uf[i] = i;
    std::function<u32(u32)> find = [&](u32 a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
    for (u32 i = 0; i < oranges.size(); ++i)
        for (u32 j = i + 1; j < oranges.size(); ++j) {
            bool related = g.has_edge(oranges[i], oranges[j]) ||
                           (!g.neighbors(oranges[i]).empty() &&
                            g.neighbors(oranges[i]) == g.neighbors(oranges[j]));
            if (related) uf[find(i)] = find(j);
        }
    std::vector<std::vector<u32>> classes;
    {
        std::vector<int> class_of(oranges.size(), -1);
        for (u32 i = 0; i < oranges.size(); ++i) {
            u32 root = find(i);
            if (class_of[root] < 0) {
                class_of[root] = static_cast<int>(classes.size());
                classes.push_back({});
            }
            classes[static_cast<u32>(class_of[root])].push_back(oranges[i]);
        }
    }
    if (classes.size() > ell) return false;

    // Identified cluster: the class plus blue vertices adjacent to it.
    std::vector<u32> owner(n + 1, 0);
    std::vector<std::vector<u32>> identified(classes.size());
    for (u32 ci = 0; ci < classes.size(); ++ci) {
        std::vector<u32> cluster = classes[ci];
        for (u32 v : classes[ci])
            for (u32 w : g.neighbors(v))
                if (!bit(orange_mask, w)) cluster.push_back(w);
        std::sort(cluster.begin(), cluster.end());
        cluster.erase(std::unique(cluster.begin(), cluster.end()), cluster.end());
        for (u32 v : cluster) {
            if (owner[v]) return false;   // identified clusters overlap
            owner[v] = ci + 1;
        }
        identified[ci] = std::move(cluster);
    }
    std::vector<u32> leftovers;
    for (u32 v = 1; v <= n; ++v)
        if (!owner[v]) leftovers.push_back(v);
    if (leftovers.size() > 2 * ctx.k) return false;

    const u32 r = static_cast<u32>(identified.size());
    // Injective assignments of identified clusters to indices, lex order.
    std::vector<u32> idx_of(r, 0);
    std::vector<bool> used(ell + 1, false);
    std::vector<u32> placement(leftovers.size(), 1);
    std::function<bool(u32)> assign_cluster = [&](u32 ci) -> bool {
        if (ci == r) {
            // Leftover placements, lex order (last position fastest).
            while (true) {
                std::vector<std::vector<u32>> clusters(ell);
                for (u32 i = 0; i < r; ++i) clusters[idx_of[i] - 1] = identified[i];
                for (size_t i = 0; i < leftovers.size(); ++i)
                    clusters[placement[i] - 1].push_back(leftovers[i]);
                u64 cost = 0;
                bool feasible = true;
                for (u32 c = 0; c < ell && feasible; ++c) {
                    std::sort(clusters[c].begin(), clusters[c].end());
                    u64 pc = ctx.partite_cost(clusters[c], ctx.parts[c]);
                    if (pc == kInfeasible)
                        feasible = false;
                    else
                        cost += pc;
                }
                if (feasible) {
                    for (u32 c1 = 0; c1 < ell && cost <= ctx.k; ++c1)
                        for (u32 c2 = c1 + 1; c2 < ell; ++c2)
                            cost += edges_between(g, clusters[c1], clusters[c2]);
                    if (cost <= ctx.k) {
                        if (out) {
                            out->clusters = clusters;
                            // wholesale edits from the chosen partitioning
                            std::vector<u32> cluster_of(n + 1, 0);
                            for (u32 c = 0; c < ell; ++c)
                                for (u32 v : clusters[c]) cluster_of[v] = c + 1;
                            // within-cluster edits come from the minimal
                            // p-partition; rebuild it per cluster
                            for (u32 c = 0; c < ell; ++c) {
                                auto part = best_partition(ctx, clusters[c], ctx.parts[c]);
                                for (size_t a = 0; a < clusters[c].size(); ++a)
                                    for (size_t b = a + 1; b < clusters[c].size(); ++b) {
                                        bool edge = g.has_edge(clusters[c][a], clusters[c][b]);
                                        if (part[a] == part[b] && edge)
                                            out->edits.deletions.push_back(
                                                {clusters[c][a], clusters[c][b]});
                                        if (part[a] != part[b] && !edge)
                                            out->edits.additions.push_back(
                                                {clusters[c][a], clusters[c][b]});
                                    }
                            }
                            for (const auto& [u, v] : g.edges())
                                if (cluster_of[u] != cluster_of[v])
                                    out->edits.deletions.push_back({u, v});
                        }
                        return true;
                    }
                }
                // next placement
                size_t pos = leftovers.size();
                while (pos > 0) {
                    --pos;
                    if (++placement[pos] <= ell) break;
                    placement[pos] = 1;
                    if (pos == 0) return false;
                }
                if (leftovers.empty()) return false;
            }
        }
        for (u32 idx = 1; idx <= ell; ++idx) {
            if (used[idx]) continue;
            used[idx] = true;
            idx_of[ci] = idx;
            if (assign_cluster(ci + 1)) {
                used[idx] = false;
                return true;
            }
            used[idx] = false;
        }
        return false;
    };
    std::fill(placement.begin(), placement.end(), 1);
    return assign_cluster(0);
}

} // namespace

ClusterResult multipartite_cluster_editing(const Graph& g, u64 k, const std::vector<u32>& parts,
                                           const RunOptions& opt) {
    require_undirected(g);
    if (parts.empty()) throw domain_error("parts sequence must be nonempty");
    for (u32 p : parts)
        if (p == 0) throw domain_error("part sizes must be positive");
    auto start = Clock::now();
    ClusterResult result;
    result.stats.threads = resolve_threads(opt.threads);
    result.stats.family_size = "0";
    const u32 n = g.vertex_count();
    if (n == 0) {
        result.stats.millis = since_ms(start);
        return result;
    }

    MpContext ctx{g, k, parts, {}};
    auto accept = [&](u64 mask) {
        MpContext local{g, k, parts, {}};
        return eval_mp_table(local, mask, nullptr);
    };
    auto scan = detail::two_color_search(n, 2 * k + parts.size(), opt, accept);
    detail::fill_stats(result.stats, scan);
    if (scan.hit) {
        ClusterSolution sol;
        if (!eval_mp_table(ctx, scan.hit->second, &sol))
            throw std::logic_error("multipartite witness pass lost the solution");
        for (auto& cluster : sol.clusters) std::sort(cluster.begin(), cluster.end());
        if (auto err = check_cluster_solution(g, sol, k, parts.size(), parts))
            throw std::logic_error("multipartite witness failed validation: " + *err);
        result.found = true;
        result.witness = std::move(sol);
    }
    result.stats.millis = since_ms(start);
    return result;
}

} // namespace ccg
