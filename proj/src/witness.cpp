#include "ccg/witness.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ccg {

namespace {

std::pair<u32, u32> norm(u32 u, u32 v) { return {std::min(u, v), std::max(u, v)}; }

} // namespace

CheckResult check_embedding(const Graph& h, const Graph& g, const Embedding& emb,
                            const std::vector<std::pair<u32, u32>>& anchors) {
    if (emb.assignment.size() != h.vertex_count() + 1) return "assignment arity mismatch";
    std::set<u32> used;
    for (u32 u = 1; u <= h.vertex_count(); ++u) {
        u32 host = emb.assignment[u];
        if (host == 0 || host > g.vertex_count()) return "host vertex out of range";
        if (!used.insert(host).second) return "assignment not injective";
    }
    for (const auto& [u, v] : h.edges()) {
        if (h.directed()) {
            if (!g.directed()) return "directed pattern into undirected host";
            if (!g.has_edge(emb.assignment[u], emb.assignment[v])) return "arc not preserved";
        } else if (g.directed()) {
            if (!g.has_undirected(emb.assignment[u], emb.assignment[v])) return "edge not preserved";
        } else if (!g.has_edge(emb.assignment[u], emb.assignment[v])) {
            return "edge not preserved";
        }
    }
    for (const auto& [pattern_vertex, host] : anchors)
        if (emb.assignment[pattern_vertex] != host) return "anchor constraint violated";
    return std::nullopt;
}

CheckResult check_cover(const Graph& g, const CoverWitness& w, CoverMode mode, u64 budget,
                        u64 target) {
    std::set<u32> chosen(w.vertices.begin(), w.vertices.end());
    if (chosen.size() != w.vertices.size()) return "duplicate cover vertices";
    for (u32 v : chosen)
        if (v == 0 || v > g.vertex_count()) return "cover vertex out of range";
    // Recompute the incident edge set and compare with the witness list.
    std::set<std::pair<u32, u32>> incident;
    for (const auto& [u, v] : g.edges())
        if (chosen.count(u) || chosen.count(v)) incident.insert(norm(u, v));
    std::set<std::pair<u32, u32>> listed;
    for (const auto& [u, v] : w.covered) {
        if (!g.has_undirected(u, v)) return "covered pair is not an edge";
        if (!chosen.count(u) && !chosen.count(v)) return "listed edge has no endpoint in the cover";
        listed.insert(norm(u, v));
    }
    if (listed != incident) return "covered edge list does not match incident edges";
    switch (mode) {
        case CoverMode::all_edges:
            if (incident.size() != g.edge_count()) return "not all edges covered";
            if (chosen.size() > budget) return "cover exceeds budget";
            break;
        case CoverMode::at_least:
            if (incident.size() < target) return "too few edges covered";
            if (chosen.size() > budget) return "cover exceeds budget";
            break;
        case CoverMode::exactly:
            if (incident.size() != target) return "covered count differs from target";
            break;
    }
    return std::nullopt;
}

Graph apply_edits(const Graph& g, const EditSet& edits) {
    if (g.directed()) throw domain_error("edit sets apply to undirected graphs");
    std::set<std::pair<u32, u32>> additions, deletions;
    for (auto [u, v] : edits.additions) {
        if (g.has_edge(u, v)) throw domain_error("addition already present");
        if (!additions.insert(norm(u, v)).second) throw domain_error("duplicate addition");
    }
    for (auto [u, v] : edits.deletions) {
        if (!g.has_edge(u, v)) throw domain_error("deletion not present");
        if (!deletions.insert(norm(u, v)).second) throw domain_error("duplicate deletion");
    }
    Graph out(g.vertex_count(), false);
    for (const auto& [u, v] : g.edges())
        if (!deletions.count(norm(u, v))) out.add_edge(u, v);
    for (const auto& [u, v] : additions) out.add_edge(u, v);
    return out;
}

CheckResult check_edit_set(const Graph& g, const EditSet& edits) {
    try {
        apply_edits(g, edits);
    } catch (const domain_error& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

bool is_complete_multipartite(const Graph& g, const std::vector<u32>& vertices, u32 p) {
    if (p == 0 || vertices.size() < p) return false;
    // Parts = connected components of the complement restricted to vertices;
    // complete p-partite iff those components are cliques in the complement,
    // i.e. two vertices are adjacent iff they sit in different parts.
    std::vector<u32> part(vertices.size(), 0);
    u32 next_part = 0;
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (part[i]) continue;
        ++next_part;
        std::vector<size_t> stack{i};
        part[i] = next_part;
        while (!stack.empty()) {
            size_t x = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < vertices.size(); ++j)
                if (!part[j] && !g.has_undirected(vertices[x], vertices[j])) {
                    part[j] = next_part;
                    stack.push_back(j);
                }
        }
    }
    if (next_part != p) return false;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            bool adjacent = g.has_undirected(vertices[i], vertices[j]);
            if (adjacent != (part[i] != part[j])) return false;
        }
    return true;
}

CheckResult check_cluster_solution(const Graph& g, const ClusterSolution& sol, u64 budget,
                                   std::optional<u64> cluster_count,
                                   const std::vector<u32>& parts) {
    if (auto err = check_edit_set(g, sol.edits)) return err;
    if (sol.edits.cost() > budget) return "edit cost exceeds budget";
    Graph edited = apply_edits(g, sol.edits);
    auto comps = connected_components(edited);
    if (cluster_count && comps.size() != *cluster_count) return "cluster count mismatch";
    std::set<std::vector<u32>> claimed;
    for (auto cluster : sol.clusters) {
        std::sort(cluster.begin(), cluster.end());
        claimed.insert(cluster);
    }
    std::set<std::vector<u32>> actual(comps.begin(), comps.end());
    if (claimed != actual) return "claimed clusters differ from edited components";
    if (parts.empty()) {
        for (const auto& comp : comps)
            if (!is_clique(edited, comp)) return "cluster is not a clique";
    } else {
        if (comps.size() != parts.size()) return "component count differs from parts sequence";
        // Multiset matching between components and part counts.
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
        if (!match(0)) return "components do not realize the parts sequence";
    }
    return std::nullopt;
}

CheckResult check_cut(const Graph& g, const CutWitness& w, u64 budget, u64 size, CutMode mode,
                      std::optional<u32> terminal) {
    std::vector<u32> owner(g.vertex_count() + 1, 0);
    auto assign = [&](const std::vector<u32>& side, u32 id) -> bool {
        for (u32 v : side) {
            if (v == 0 || v > g.vertex_count() || owner[v]) return false;
            owner[v] = id;
        }
        return true;
    };
    if (!assign(w.x, 1) || !assign(w.s, 2) || !assign(w.y, 3)) return "not a partition";
    for (u32 v = 1; v <= g.vertex_count(); ++v)
        if (!owner[v]) return "vertex missing from partition";
    if (w.s.size() > budget) return "separator exceeds budget";
    if (mode == CutMode::connected_exact) {
        if (w.x.size() != size) return "separated set has wrong size";
        // Connectivity of X.
        if (w.x.empty()) return "separated set empty";
        std::set<u32> in_x(w.x.begin(), w.x.end());
        std::vector<u32> stack{w.x[0]};
        std::set<u32> seen{w.x[0]};
        while (!stack.empty()) {
            u32 v = stack.back();
            stack.pop_back();
            for (u32 u : g.undirected_neighbors(v))
                if (in_x.count(u) && seen.insert(u).second) stack.push_back(u);
        }
        if (seen.size() != w.x.size()) return "separated set not connected";
    } else {
        if (w.x.size() <= 1 || w.x.size() > size) return "separated set size out of range";
    }
    for (const auto& [u, v] : g.edges()) {
        if ((owner[u] == 1 && owner[v] == 3) || (owner[u] == 3 && owner[v] == 1))
            return "edge crosses from X to Y";
    }
    if (terminal) {
        if (*terminal == 0 || *terminal > g.vertex_count()) return "terminal out of range";
        if (owner[*terminal] != 1) return "terminal not inside X";
    }
    return std::nullopt;
}

CheckResult check_balls(const Graph& g, const BallsWitness& w, u32 k, u32 radius,
                        const std::function<bool(const Graph&, u32)>& predicate) {
    if (w.centers.size() != k) return "wrong number of centers";
    if (w.radius != radius) return "radius mismatch";
    for (u32 a : w.centers)
        if (a == 0 || a > g.vertex_count()) return "center out of range";
    for (size_t i = 0; i < w.centers.size(); ++i) {
        auto dist = bfs_distances(g, w.centers[i], /*ignore_direction=*/true);
        for (size_t j = i + 1; j < w.centers.size(); ++j) {
            u32 d = dist[w.centers[j]];
            if (d != ~u32{0} && d <= 2 * radius) return "centers too close";
        }
    }
    for (u32 a : w.centers) {
        BallView view = ball(g, a, radius);
        if (!predicate(view.graph, view.center)) return "ball fails the predicate";
    }
    return std::nullopt;
}

} // namespace ccg
