#include "ccg/embed.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>

namespace ccg {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Static per-solve view of the decomposition: post-order, per-bag pattern
// edges, shared-vertex index maps, and the incremental assignment schedule
// (pattern vertices in order of first appearance; a node is evaluated as soon
// as its bag and all children are complete).
struct TdPrep {
    u32 pattern_n = 0;
    const Graph* pattern = nullptr;
    std::vector<std::vector<u32>> bags;
    std::vector<std::vector<u32>> children;
    std::vector<u32> post_order;
    u32 root = 0;
    // (i, j) index pairs into the bag; for directed patterns the arc runs
    // bag[i] -> bag[j].
    std::vector<std::vector<std::pair<u32, u32>>> bag_edges;
    // per node, per child (children order): (index in node bag, index in child bag)
    std::vector<std::vector<std::vector<std::pair<u32, u32>>>> shared_idx;
    std::vector<u32> slot_vertex;                 // slot s (1-based) -> pattern vertex
    std::vector<u32> vertex_slot;                 // inverse
    std::vector<std::vector<u32>> eval_after;     // eval_after[s] = nodes evaluated after slot s (s=0: upfront)
    u32 levels = 0;
    int width = 0;
};

TdPrep prepare(const Graph& h, const TreeDecomposition& td) {
    auto check = validate_tree_decomposition(h, td);
    if (!check.valid) throw domain_error("invalid tree decomposition: " + check.reason);

    TdPrep prep;
    prep.pattern_n = h.vertex_count();
    prep.pattern = &h;
    prep.bags = td.bags;
    prep.children = td.children();
    prep.root = static_cast<u32>(td.root());
    prep.levels = td.levels();
    prep.width = td.width();

    // Post-order, children ascending.
    std::vector<u32> stack{prep.root};
    std::vector<u32> rpo;
    while (!stack.empty()) {
        u32 node = stack.back();
        stack.pop_back();
        rpo.push_back(node);
        for (u32 c : prep.children[node]) stack.push_back(c);
    }
    prep.post_order.assign(rpo.rbegin(), rpo.rend());

    const u32 nodes = td.node_count();
    prep.bag_edges.resize(nodes);
    prep.shared_idx.resize(nodes);
    for (u32 node = 0; node < nodes; ++node) {
        const auto& bag = prep.bags[node];
        for (u32 i = 0; i < bag.size(); ++i)
            for (u32 j = 0; j < bag.size(); ++j) {
                if (i == j) continue;
                if (h.directed() ? h.has_edge(bag[i], bag[j])
                                 : (j > i && h.has_edge(bag[i], bag[j])))
                    prep.bag_edges[node].push_back({i, j});
            }
        for (u32 c : prep.children[node]) {
            std::vector<std::pair<u32, u32>> shared;
            const auto& cbag = prep.bags[c];
            for (u32 i = 0; i < bag.size(); ++i) {
                auto it = std::lower_bound(cbag.begin(), cbag.end(), bag[i]);
                if (it != cbag.end() && *it == bag[i])
                    shared.push_back({i, static_cast<u32>(it - cbag.begin())});
            }
            prep.shared_idx[node].push_back(std::move(shared));
        }
    }

    // Assignment slots: first appearance over the post-order.
    prep.vertex_slot.assign(prep.pattern_n + 1, 0);
    for (u32 node : prep.post_order)
        for (u32 v : prep.bags[node])
            if (!prep.vertex_slot[v]) {
                prep.slot_vertex.push_back(v);
                prep.vertex_slot[v] = static_cast<u32>(prep.slot_vertex.size());
            }

    // Node evaluation points.
    std::vector<u32> when(nodes, 0);
    prep.eval_after.assign(prep.slot_vertex.size() + 1, {});
    for (u32 node : prep.post_order) {
        u32 w = 0;
        for (u32 v : prep.bags[node]) w = std::max(w, prep.vertex_slot[v]);
        for (u32 c : prep.children[node]) w = std::max(w, when[c]);
        when[node] = w;
        prep.eval_after[w].push_back(node);
    }
    return prep;
}

using Tuple = std::vector<u32>;
using Survivors = std::vector<Tuple>;

enum class EdgeCheck { undirected, directed, mixed };

EdgeCheck edge_check_mode(const Graph& h, const Graph& g) {
    if (h.directed()) {
        if (!g.directed()) throw domain_error("directed pattern requires a directed host");
        return EdgeCheck::directed;
    }
    return g.directed() ? EdgeCheck::mixed : EdgeCheck::undirected;
}

bool host_edge(const Graph& g, EdgeCheck mode, u32 a, u32 b) {
    switch (mode) {
        case EdgeCheck::directed: return g.has_edge(a, b);
        case EdgeCheck::mixed: return g.has_undirected(a, b);
        default: return g.has_edge(a, b);
    }
}

// Surviving bag tuples for one node: candidates are generated
// color-respectingly (the cartesian product of the bag classes, lex order),
// kept when internal pattern edges map to host edges and every child has an
// agreeing survivor. Returns the number of candidates examined.
u64 eval_node(const TdPrep& prep, const Graph& g, EdgeCheck mode, u32 node,
              const std::vector<const std::vector<u32>*>& bag_classes,
              const std::vector<const Survivors*>& child_survivors, Survivors& out) {
    const auto& bag = prep.bags[node];
    const u32 arity = static_cast<u32>(bag.size());
    out.clear();
    for (u32 i = 0; i < arity; ++i)
        if (bag_classes[i]->empty()) return 0;

    std::vector<u32> idx(arity, 0);
    Tuple tuple(arity, 0);
    u64 candidates = 0;
    bool done = false;
    while (!done) {
        ++candidates;
        for (u32 i = 0; i < arity; ++i) tuple[i] = (*bag_classes[i])[idx[i]];
        bool ok = true;
        for (const auto& [i, j] : prep.bag_edges[node])
            if (!host_edge(g, mode, tuple[i], tuple[j])) {
                ok = false;
                break;
            }
        if (ok) {
            for (u32 ci = 0; ci < prep.children[node].size() && ok; ++ci) {
                const auto& shared = prep.shared_idx[node][ci];
                const Survivors& cs = *child_survivors[ci];
                bool matched = false;
                for (const Tuple& ct : cs) {
                    bool agree = true;
                    for (const auto& [ni, cj] : shared)
                        if (tuple[ni] != ct[cj]) {
                            agree = false;
                            break;
                        }
                    if (agree) {
                        matched = true;
                        break;
                    }
                }
                ok = matched;
            }
            if (ok) out.push_back(tuple);
        }
        // odometer
        if (arity == 0) break;
        u32 pos = arity;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < bag_classes[pos]->size()) break;
            idx[pos] = 0;
            if (pos == 0) done = true;
        }
    }
    return candidates;
}

struct DpRun {
    bool ok = false;
    Embedding emb;
    u64 max_node_checks = 0;
};

// Full bottom-up DP for one coloring (classes per pattern vertex). Witness:
// lexicographically smallest root tuple, then top-down the smallest
// consistent child tuples.
DpRun run_dp(const TdPrep& prep, const Graph& g, EdgeCheck mode,
             const std::vector<std::vector<u32>>& classes, bool want_witness, bool audit) {
    DpRun run;
    const u32 nodes = static_cast<u32>(prep.bags.size());
    std::vector<Survivors> survivors(nodes);
    for (u32 node : prep.post_order) {
        std::vector<const std::vector<u32>*> bag_classes;
        for (u32 v : prep.bags[node]) bag_classes.push_back(&classes[v]);
        std::vector<const Survivors*> child_survivors;
        for (u32 c : prep.children[node]) child_survivors.push_back(&survivors[c]);
        u64 checks = eval_node(prep, g, mode, node, bag_classes, child_survivors, survivors[node]);
        run.max_node_checks = std::max(run.max_node_checks, checks);
        if (survivors[node].empty()) return run;
    }
    run.ok = true;

    if (audit) {
        // Structural audit: every survivor agrees with some survivor of each child.
        for (u32 node : prep.post_order)
            for (const Tuple& t : survivors[node])
                for (u32 ci = 0; ci < prep.children[node].size(); ++ci) {
                    bool matched = false;
                    for (const Tuple& ct : survivors[prep.children[node][ci]]) {
                        bool agree = true;
                        for (const auto& [ni, cj] : prep.shared_idx[node][ci])
                            if (t[ni] != ct[cj]) agree = false;
                        if (agree) matched = true;
                    }
                    if (!matched) throw std::logic_error("DP audit: inconsistent survivor");
                }
    }

    if (!want_witness) return run;
    run.emb.assignment.assign(prep.pattern_n + 1, 0);
    std::vector<Tuple> chosen(nodes);
    std::vector<u32> stack{prep.root};
    chosen[prep.root] = survivors[prep.root].front();
    while (!stack.empty()) {
        u32 node = stack.back();
        stack.pop_back();
        const auto& bag = prep.bags[node];
        for (u32 i = 0; i < bag.size(); ++i) run.emb.assignment[bag[i]] = chosen[node][i];
        for (u32 ci = 0; ci < prep.children[node].size(); ++ci) {
            u32 c = prep.children[node][ci];
            const auto& shared = prep.shared_idx[node][ci];
            bool found = false;
            for (const Tuple& ct : survivors[c]) {
                bool agree = true;
                for (const auto& [ni, cj] : shared)
                    if (chosen[node][ni] != ct[cj]) {
                        agree = false;
                        break;
                    }
                if (agree) {
                    chosen[c] = ct;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("witness reconstruction lost consistency");
            stack.push_back(c);
        }
    }
    return run;
}

// Sparse member-index comparison for sigma maps (pattern vertex -> cell).
// The member index contribution is sum_u (u-1) * c^sigma(u); digit 0 entries
// are invisible, so compare nonzero digits from the highest cell down.
bool sigma_less(const std::vector<u32>& a, const std::vector<u32>& b) {
    auto digits = [](const std::vector<u32>& s) {
        std::vector<std::pair<u32, u32>> d;   // (cell, digit), digit > 0
        for (u32 u = 2; u < s.size(); ++u) d.push_back({s[u], u - 1});
        std::sort(d.begin(), d.end(), [](auto& x, auto& y) { return x.first > y.first; });
        return d;
    };
    auto da = digits(a), db = digits(b);
    for (size_t i = 0; i < std::min(da.size(), db.size()); ++i) {
        if (da[i].first != db[i].first) return da[i].first < db[i].first;
        if (da[i].second != db[i].second) return da[i].second < db[i].second;
    }
    return da.size() < db.size();
}

struct BlockHit {
    std::vector<u32> sigma_cells;   // pattern vertex -> hash cell
};

// Per-block search: enumerate injections sigma of pattern vertices into the
// block's occupied hash cells (each sigma stands for the family members whose
// omega routes those cells to those colors) and run the DP incrementally.
// The search is candidate-driven: per node all edge-consistent host tuples
// are enumerated once, sorted by their cell vector in assignment order, and
// the DFS narrows per-node ranges as sigma grows. A node all of whose
// entries touch a small blocked cell set dies in O(1) (greedy hitting sets).
// Counts the sigma whose DP reached the root; keeps the smallest member
// index among the successes.
struct BlockSearch {
    const TdPrep& prep;
    const Graph& g;
    EdgeCheck mode;
    const std::vector<u32>& anchor;   // pattern vertex -> host or 0

    std::vector<u32> cell_of_host;    // per host (1-based), occupied-cell INDEX
    std::vector<u32> occ_cells;       // sorted distinct cell values
    u64 used_mask = 0;

    // Per node: feasible bag assignments, flattened. Entry e of a node with
    // arity a holds cells (slot order) at cells[e*a .. e*a+a) and hosts (bag
    // order) at hosts[e*a .. e*a+a); entries are sorted lexicographically by
    // their cell vector.
    struct NodeIndex {
        u32 arity = 0;
        u32 count = 0;
        std::vector<u32> cells;
        std::vector<u32> hosts;
        std::vector<u64> masks;
        std::vector<u32> slot_positions;    // bag index per slot-ordered position
        u64 hitting = 0;                    // 0 = no small hitting set found
        std::vector<std::pair<u32, u32>> range_stack;
        u32 depth = 0;
    };
    std::vector<NodeIndex> nodes;
    std::vector<std::vector<u32>> nodes_of_vertex;   // pattern vertex -> node ids

    std::vector<int> sigma;           // pattern vertex -> occupied-cell index
    // survivors per node, flat bag-ordered host tuples
    std::vector<std::vector<u32>> survivors;
    std::vector<u32> survivor_count;
    u64 completed = 0;
    u64 max_node_checks = 0;
    std::optional<std::vector<u32>> best;

    // scratch
    std::vector<u32> scratch_cells, scratch_hosts, raw_cells;
    std::vector<u32> perm;
    std::vector<u64> hitting_scratch;

    BlockSearch(const TdPrep& p, const Graph& host, EdgeCheck m, const std::vector<u32>& anch)
        : prep(p), g(host), mode(m), anchor(anch) {
        const u32 node_count = static_cast<u32>(prep.bags.size());
        nodes.resize(node_count);
        nodes_of_vertex.assign(prep.pattern_n + 1, {});
        for (u32 node = 0; node < node_count; ++node) {
            NodeIndex& idx = nodes[node];
            const auto& bag = prep.bags[node];
            idx.arity = static_cast<u32>(bag.size());
            std::vector<u32> order(idx.arity);
            for (u32 i = 0; i < idx.arity; ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](u32 a, u32 b) {
                return prep.vertex_slot[bag[a]] < prep.vertex_slot[bag[b]];
            });
            idx.slot_positions = std::move(order);
            for (u32 v : bag) nodes_of_vertex[v].push_back(node);
        }
        survivors.resize(node_count);
        survivor_count.assign(node_count, 0);
        sigma.assign(prep.pattern_n + 1, -1);
    }

    bool load_block(const FamilyParams& params, const Block& blk) {
        const u32 n = g.vertex_count();
        occ_cells.clear();
        raw_cells.assign(n + 1, 0);
        for (u32 x = 1; x <= n; ++x) {
            raw_cells[x] = cell_of(params, blk, x);
            occ_cells.push_back(raw_cells[x]);
        }
        std::sort(occ_cells.begin(), occ_cells.end());
        occ_cells.erase(std::unique(occ_cells.begin(), occ_cells.end()), occ_cells.end());
        if (occ_cells.size() < prep.pattern_n || occ_cells.size() > 64) return false;
        cell_of_host.assign(n + 1, 0);
        for (u32 x = 1; x <= n; ++x)
            cell_of_host[x] = static_cast<u32>(
                std::lower_bound(occ_cells.begin(), occ_cells.end(), raw_cells[x]) -
                occ_cells.begin());

        for (u32 node = 0; node < nodes.size(); ++node) build_entries(node);
        std::fill(sigma.begin(), sigma.end(), -1);
        used_mask = 0;
        std::fill(survivor_count.begin(), survivor_count.end(), 0);
        completed = 0;
        best.reset();
        return true;
    }

    // All host tuples satisfying the bag's internal pattern edges, distinct
    // cells inside the bag, and anchors, in slot order.
    void build_entries(u32 node) {
        NodeIndex& idx = nodes[node];
        const auto& bag = prep.bags[node];
        const u32 arity = idx.arity;
        const auto& order = idx.slot_positions;
        scratch_cells.clear();
        scratch_hosts.clear();

        std::vector<u32> cells(arity, 0);
        std::vector<u32> hosts_bag(arity, 0);
        std::function<void(u32)> rec = [&](u32 d) {
            if (d == arity) {
                scratch_cells.insert(scratch_cells.end(), cells.begin(), cells.end());
                scratch_hosts.insert(scratch_hosts.end(), hosts_bag.begin(), hosts_bag.end());
                return;
            }
            u32 bag_pos = order[d];
            u32 u = bag[bag_pos];
            // When u has a pattern edge to an already placed bag vertex, only
            // that host's adjacency can work; otherwise scan all hosts.
            const std::vector<u32>* candidates = nullptr;
            for (u32 e = 0; e < d && !candidates; ++e) {
                u32 w = bag[order[e]];
                u32 host_w = hosts_bag[order[e]];
                if (mode == EdgeCheck::directed) {
                    if (prep.pattern->has_edge(w, u))
                        candidates = &g.neighbors(host_w);
                    else if (prep.pattern->has_edge(u, w))
                        candidates = &g.in_neighbors(host_w);
                } else if (prep.pattern->has_edge(u, w)) {
                    candidates = &g.undirected_neighbors(host_w);
                }
            }
            auto place = [&](u32 host) {
                if (anchor[u] && anchor[u] != host) return;
                u32 cell = cell_of_host[host];
                for (u32 e = 0; e < d; ++e)
                    if (cells[e] == cell) return;
                for (u32 e = 0; e < d; ++e) {
                    u32 other_pos = order[e];
                    u32 w = bag[other_pos];
                    if (mode == EdgeCheck::directed) {
                        if (prep.pattern->has_edge(u, w) &&
                            !g.has_edge(host, hosts_bag[other_pos]))
                            return;
                        if (prep.pattern->has_edge(w, u) &&
                            !g.has_edge(hosts_bag[other_pos], host))
                            return;
                    } else if (prep.pattern->has_edge(u, w) &&
                               !host_edge(g, mode, host, hosts_bag[other_pos])) {
                        return;
                    }
                }
                cells[d] = cell;
                hosts_bag[bag_pos] = host;
                rec(d + 1);
            };
            if (candidates) {
                for (u32 host : *candidates) place(host);
            } else {
                for (u32 host = 1; host <= g.vertex_count(); ++host) place(host);
            }
        };
        rec(0);

        idx.count = arity == 0 ? 1 : static_cast<u32>(scratch_cells.size() / arity);
        if (arity == 0) {
            idx.cells.clear();
            idx.hosts.clear();
            idx.masks.assign(1, 0);
        } else {
            perm.resize(idx.count);
            for (u32 i = 0; i < idx.count; ++i) perm[i] = i;
            std::sort(perm.begin(), perm.end(), [&](u32 a, u32 b) {
                const u32* ca = scratch_cells.data() + static_cast<size_t>(a) * arity;
                const u32* cb = scratch_cells.data() + static_cast<size_t>(b) * arity;
                return std::lexicographical_compare(ca, ca + arity, cb, cb + arity);
            });
            idx.cells.resize(scratch_cells.size());
            idx.hosts.resize(scratch_hosts.size());
            idx.masks.assign(idx.count, 0);
            for (u32 i = 0; i < idx.count; ++i) {
                const size_t src = static_cast<size_t>(perm[i]) * arity;
                const size_t dst = static_cast<size_t>(i) * arity;
                u64 mask = 0;
                for (u32 j = 0; j < arity; ++j) {
                    idx.cells[dst + j] = scratch_cells[src + j];
                    idx.hosts[dst + j] = scratch_hosts[src + j];
                    mask |= u64{1} << scratch_cells[src + j];
                }
                idx.masks[i] = mask;
            }
        }
        idx.range_stack.assign(1, {0, idx.count});
        idx.depth = 0;

        // greedy hitting set over entry masks, at most 4 cells
        idx.hitting = 0;
        if (idx.count > 0 && arity > 0) {
            hitting_scratch.assign(idx.masks.begin(), idx.masks.end());
            u64 hit = 0;
            u32 coverage[64];
            size_t remaining = hitting_scratch.size();
            for (int round = 0; round < 4 && remaining > 0; ++round) {
                std::fill(coverage, coverage + occ_cells.size(), 0);
                for (size_t i = 0; i < remaining; ++i) {
                    u64 m = hitting_scratch[i];
                    while (m) {
                        coverage[__builtin_ctzll(m)] += 1;
                        m &= m - 1;
                    }
                }
                u32 best_cell = 0, best_cover = 0;
                for (u32 c = 0; c < occ_cells.size(); ++c)
                    if (coverage[c] > best_cover) {
                        best_cover = coverage[c];
                        best_cell = c;
                    }
                if (best_cover == 0) break;
                hit |= u64{1} << best_cell;
                size_t keep = 0;
                for (size_t i = 0; i < remaining; ++i)
                    if (!(hitting_scratch[i] & (u64{1} << best_cell)))
                        hitting_scratch[keep++] = hitting_scratch[i];
                remaining = keep;
            }
            if (remaining == 0) idx.hitting = hit;
        }
    }

    // A node none of whose bag vertices is assigned yet is dead when a small
    // set of cells hits every entry and all of those cells are used elsewhere
    // (sigma is injective, so its entries must avoid every used cell). Once
    // the node's own vertices hold cells the test would be unsound.
    bool any_dead_node() const {
        for (const auto& idx : nodes)
            if (idx.depth == 0 && idx.hitting && (idx.hitting & ~used_mask) == 0) return true;
        return false;
    }

    void record_if_best() {
        std::vector<u32> cells(prep.pattern_n + 1, 0);
        for (u32 v = 1; v <= prep.pattern_n; ++v) cells[v] = occ_cells[static_cast<u32>(sigma[v])];
        if (!best || sigma_less(cells, *best)) best = std::move(cells);
    }

    // Survivors at node completion: entries in the current range (they match
    // sigma on the whole bag) filtered by child agreement.
    bool complete_node(u32 node) {
        NodeIndex& idx = nodes[node];
        auto [lo, hi] = idx.range_stack.back();
        auto& out = survivors[node];
        out.clear();
        survivor_count[node] = 0;
        max_node_checks = std::max<u64>(max_node_checks, hi - lo);
        if (node == prep.root) ++completed;
        const u32 arity = idx.arity;
        for (u32 e = lo; e < hi; ++e) {
            const u32* hosts = idx.hosts.data() + static_cast<size_t>(e) * arity;
            bool ok = true;
            for (u32 ci = 0; ci < prep.children[node].size() && ok; ++ci) {
                const auto& shared = prep.shared_idx[node][ci];
                u32 child = prep.children[node][ci];
                const u32 child_arity = nodes[child].arity;
                const auto& cs = survivors[child];
                bool matched = survivor_count[child] == 0 ? false : false;
                for (u32 t = 0; t < survivor_count[child] && !matched; ++t) {
                    const u32* ct = cs.data() + static_cast<size_t>(t) * child_arity;
                    bool agree = true;
                    for (const auto& [ni, cj] : shared)
                        if (hosts[ni] != ct[cj]) {
                            agree = false;
                            break;
                        }
                    matched = agree;
                }
                ok = matched;
            }
            if (ok) {
                out.insert(out.end(), hosts, hosts + arity);
                ++survivor_count[node];
            }
        }
        return survivor_count[node] > 0;
    }

    // Narrow every node containing u to entries whose next position carries
    // sigma(u)'s cell; false when some node runs empty.
    bool push_vertex(u32 u, u32 cell, u32& pushed) {
        pushed = 0;
        for (u32 node : nodes_of_vertex[u]) {
            NodeIndex& idx = nodes[node];
            auto [lo, hi] = idx.range_stack.back();
            const u32 arity = idx.arity;
            const u32 d = idx.depth;
            const u32* base = idx.cells.data();
            // binary search for the subrange with cells[depth] == cell
            u32 a = lo, b = hi;
            while (a < b) {
                u32 mid = a + (b - a) / 2;
                if (base[static_cast<size_t>(mid) * arity + d] < cell)
                    a = mid + 1;
                else
                    b = mid;
            }
            u32 new_lo = a;
            u32 new_hi = a;
            while (new_hi < hi && base[static_cast<size_t>(new_hi) * arity + d] == cell)
                ++new_hi;
            ++pushed;
            idx.range_stack.push_back({new_lo, new_hi});
            ++idx.depth;
            if (new_lo == new_hi) return false;
        }
        return true;
    }

    void pop_vertex(u32 u, u32 pushed) {
        for (u32 i = 0; i < pushed; ++i) {
            NodeIndex& idx = nodes[nodes_of_vertex[u][i]];
            idx.range_stack.pop_back();
            --idx.depth;
        }
    }

    bool eval_events(u32 slot, u32& evaluated) {
        evaluated = 0;
        for (u32 node : prep.eval_after[slot]) {
            bool ok = complete_node(node);
            ++evaluated;
            if (!ok) return false;
        }
        return true;
    }

    void clear_events(u32 slot, u32 evaluated) {
        for (u32 i = 0; i < evaluated; ++i) {
            u32 node = prep.eval_after[slot][i];
            survivors[node].clear();
            survivor_count[node] = 0;
        }
    }

    void dfs(u32 slot) {
        const u32 K = static_cast<u32>(prep.slot_vertex.size());
        if (slot == 0) {
            u32 done = 0;
            if (eval_events(0, done) && K > 0) dfs(1);
            clear_events(0, done);
            return;
        }
        const u32 u = prep.slot_vertex[slot - 1];
        // candidate cells: distinct next-position cells in u's first node's
        // current range, filtered by the used set
        const NodeIndex& primary = nodes[nodes_of_vertex[u][0]];
        auto [lo, hi] = primary.range_stack.back();
        const u32 arity = primary.arity;
        const u32 d = primary.depth;
        u32 e = lo;
        while (e < hi) {
            u32 cell = primary.cells[static_cast<size_t>(e) * arity + d];
            u32 next = e;
            while (next < hi && primary.cells[static_cast<size_t>(next) * arity + d] == cell)
                ++next;
            e = next;
            if (used_mask & (u64{1} << cell)) continue;
            sigma[u] = static_cast<int>(cell);
            used_mask |= u64{1} << cell;
            u32 pushed = 0;
            if (push_vertex(u, cell, pushed) && !any_dead_node()) {
                u32 done = 0;
                if (eval_events(slot, done)) {
                    if (slot == K)
                        record_if_best();
                    else
                        dfs(slot + 1);
                }
                clear_events(slot, done);
            }
            pop_vertex(u, pushed);
            used_mask &= ~(u64{1} << cell);
            sigma[u] = -1;
        }
    }
};

void fill_family_stats(EmbedStats& stats, const FamilyParams& params) {
    stats.family_size = family_size_decimal(params);
    stats.family_size_fits = family_size_fits_u64(params);
    stats.family_size_u64 = stats.family_size_fits ? family_size(params) : 0;
    stats.family_blocks = block_count(params);
}

std::vector<u32> build_anchor_map(const Graph& h, const Graph& g,
                                  const std::vector<std::pair<u32, u32>>& anchors,
                                  bool& satisfiable) {
    satisfiable = true;
    std::vector<u32> anchor(h.vertex_count() + 1, 0);
    std::vector<bool> host_used(g.vertex_count() + 1, false);
    for (const auto& [pv, host] : anchors) {
        if (pv == 0 || pv > h.vertex_count())
            throw domain_error("anchor references missing pattern vertex " + std::to_string(pv));
        if (host == 0 || host > g.vertex_count())
            throw domain_error("anchor references missing host vertex " + std::to_string(host));
        if (anchor[pv] && anchor[pv] != host) satisfiable = false;   // conflicting anchors
        if (!anchor[pv] && host_used[host]) satisfiable = false;     // injectivity impossible
        anchor[pv] = host;
        host_used[host] = true;
    }
    return anchor;
}

} // namespace

EmbedResult embed(const Graph& h, const TreeDecomposition& td, const Graph& g,
                  const std::vector<std::pair<u32, u32>>& anchors, const RunOptions& opt) {
    auto start = Clock::now();
    EmbedResult result;
    result.stats.threads = resolve_threads(opt.threads);
    result.stats.family_size = "0";

    if (h.vertex_count() == 0) {
        result.found = true;
        result.witness = Embedding{{0}};
        result.stats.millis = elapsed_ms(start);
        return result;
    }
    TdPrep prep = prepare(h, td);
    EdgeCheck mode = edge_check_mode(h, g);
    result.stats.dp_levels = prep.levels;
    result.stats.td_width = prep.width;

    bool anchors_ok = true;
    std::vector<u32> anchor = build_anchor_map(h, g, anchors, anchors_ok);
    if (!anchors_ok || h.vertex_count() > g.vertex_count()) {
        result.stats.millis = elapsed_ms(start);
        return result;   // injectivity impossible
    }

    if (opt.engine == Engine::exhaustive) {
        if (g.vertex_count() > 10)
            throw guard_error("exhaustive engine guarded to hosts with at most 10 vertices");
        const u32 n = g.vertex_count();
        const u32 c = h.vertex_count();
        u64 tables = 1;
        for (u32 i = 0; i < n; ++i) tables *= c;
        result.stats.family_size = decimal_scaled_power(1, c, n);
        result.stats.family_size_fits = true;
        result.stats.family_size_u64 = tables;
        std::atomic<u64> max_checks{0};
        auto eval = [&](u64 index) -> std::pair<std::optional<u64>, u64> {
            std::vector<std::vector<u32>> classes(c + 1);
            u64 w = index;
            for (u32 x = 1; x <= n; ++x) {
                u32 color = static_cast<u32>(w % c) + 1;
                w /= c;
                if (anchor[color] == 0 || anchor[color] == x) classes[color].push_back(x);
            }
            DpRun run = run_dp(prep, g, mode, classes, false, opt.audit);
            u64 seen = max_checks.load();
            while (seen < run.max_node_checks &&
                   !max_checks.compare_exchange_weak(seen, run.max_node_checks)) {
            }
            return {run.ok ? std::optional<u64>(index) : std::nullopt, 1};
        };
        auto outcome = run_first_success(tables, opt, eval);
        result.stats.colorings_checked = outcome.work;
        result.stats.max_node_tuple_checks = max_checks.load();
        if (outcome.hit) {
            u64 index = outcome.hit->first;
            std::vector<std::vector<u32>> classes(c + 1);
            u64 w = index;
            for (u32 x = 1; x <= n; ++x) {
                u32 color = static_cast<u32>(w % c) + 1;
                w /= c;
                if (anchor[color] == 0 || anchor[color] == x) classes[color].push_back(x);
            }
            DpRun run = run_dp(prep, g, mode, classes, true, opt.audit);
            if (!run.ok) throw std::logic_error("exhaustive witness pass lost the solution");
            if (auto err = check_embedding(h, g, run.emb, anchors))
                throw std::logic_error("exhaustive witness failed validation: " + *err);
            result.found = true;
            result.witness = std::move(run.emb);
        }
        result.stats.millis = elapsed_ms(start);
        return result;
    }

    // Color-coding engine over the (|V_G|, |V_H|, |V_H|) family.
    if (h.vertex_count() > 8 && g.vertex_count() > 64)
        throw guard_error("patterns beyond 8 vertices are guarded to hosts with 64 vertices");
    FamilyParams params =
        family_params(g.vertex_count(), h.vertex_count(), h.vertex_count(), opt.multiplier);
    fill_family_stats(result.stats, params);
    std::atomic<u64> max_checks{0};
    // One search object per worker: block scratch buffers amortize across the
    // many cheap blocks.
    std::vector<std::unique_ptr<BlockSearch>> workers(
        static_cast<size_t>(std::max(resolve_threads(opt.threads), omp_get_max_threads())) + 1);
    auto eval = [&](u64 block_index) -> std::pair<std::optional<BlockHit>, u64> {
        auto& worker = workers[static_cast<size_t>(omp_get_thread_num())];
        if (!worker) worker = std::make_unique<BlockSearch>(prep, g, mode, anchor);
        BlockSearch& search = *worker;
        if (!search.load_block(params, block_at(params, block_index))) return {std::nullopt, 0};
        search.dfs(0);
        u64 seen = max_checks.load();
        while (seen < search.max_node_checks &&
               !max_checks.compare_exchange_weak(seen, search.max_node_checks)) {
        }
        // work unit: the block plus every color assignment whose DP completed
        if (search.best) return {BlockHit{std::move(*search.best)}, 1 + search.completed};
        return {std::nullopt, 1 + search.completed};
    };
    auto outcome = run_first_success(block_count(params), opt, eval);
    result.stats.colorings_checked = outcome.work;
    result.stats.max_node_tuple_checks = max_checks.load();

    if (outcome.hit) {
        // Rebuild the winning member's full color classes (unnamed cells take
        // color 1) and reconstruct the canonical witness from them.
        Block blk = block_at(params, outcome.hit->first);
        const auto& sigma_cells = outcome.hit->second.sigma_cells;
        std::vector<std::vector<u32>> classes(h.vertex_count() + 1);
        for (u32 x = 1; x <= g.vertex_count(); ++x) {
            u32 cell = cell_of(params, blk, x);
            u32 color = 1;
            for (u32 v = 1; v <= h.vertex_count(); ++v)
                if (sigma_cells[v] == cell) {
                    color = v;
                    break;
                }
            if (anchor[color] == 0 || anchor[color] == x) classes[color].push_back(x);
        }
        for (u32 v = 1; v <= h.vertex_count(); ++v)
            if (anchor[v]) classes[v] = {anchor[v]};
        DpRun run = run_dp(prep, g, mode, classes, true, opt.audit);
        if (!run.ok) throw std::logic_error("witness pass lost the solution");
        result.stats.max_node_tuple_checks =
            std::max(result.stats.max_node_tuple_checks, run.max_node_checks);
        if (auto err = check_embedding(h, g, run.emb, anchors))
            throw std::logic_error("embedding witness failed validation: " + *err);
        result.found = true;
        result.witness = std::move(run.emb);
    }
    result.stats.millis = elapsed_ms(start);
    return result;
}

EmbedResult embed(const Pattern& pattern, const Graph& g,
                  const std::vector<std::pair<u32, u32>>& anchors, const RunOptions& opt) {
    return embed(pattern.h, pattern.td, g, anchors, opt);
}

BoolResult distance(const Graph& g, u32 s, u32 t, u32 d, const RunOptions& opt) {
    if (s == 0 || s > g.vertex_count() || t == 0 || t > g.vertex_count())
        throw domain_error("distance endpoints out of range");
    BoolResult result;
    u64 checked = 0;
    // A walk of length <= d contains a simple path of some length j <= d, so
    // vertex-disjoint path embeddings are decision-complete here.
    for (u32 j = 0; j <= d; ++j) {
        Pattern path = build_pattern(PatternSpec::anchored_path_of(j, g.directed()));
        std::vector<std::pair<u32, u32>> anchors{{path.first_vertex, s}, {path.last_vertex, t}};
        EmbedResult er = embed(path, g, anchors, opt);
        checked += er.stats.colorings_checked;
        result.stats = er.stats;
        if (er.found) {
            result.answer = true;
            break;
        }
    }
    result.stats.colorings_checked = checked;
    return result;
}

BoolResult k_path(const Graph& g, u32 k, const RunOptions& opt) {
    if (k == 0) throw domain_error("path vertex count must be positive");
    Pattern path = build_pattern(PatternSpec::paths_of(1, k, g.directed()));
    EmbedResult er = embed(path, g, {}, opt);
    return {er.found, er.stats};
}

BoolResult matching(const Graph& g, u32 k, const RunOptions& opt) {
    if (k == 0) throw domain_error("matching size must be positive");
    Graph k2(2, {{1, 2}}, false);
    Pattern pattern = build_pattern(PatternSpec::copies_of(k2, k));
    EmbedResult er = embed(pattern, g, {}, opt);
    return {er.found, er.stats};
}

} // namespace ccg
