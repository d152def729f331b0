#include "ccg/treedec.hpp"

#include <algorithm>
#include <queue>

namespace ccg {

int TreeDecomposition::root() const {
    for (u32 i = 0; i < parent.size(); ++i)
        if (parent[i] < 0) return static_cast<int>(i);
    return -1;
}

std::vector<std::vector<u32>> TreeDecomposition::children() const {
    std::vector<std::vector<u32>> ch(node_count());
    for (u32 i = 0; i < node_count(); ++i)
        if (parent[i] >= 0) ch[static_cast<u32>(parent[i])].push_back(i);
    return ch;
}

int TreeDecomposition::width() const {
    size_t largest = 0;
    for (const auto& bag : bags) largest = std::max(largest, bag.size());
    return static_cast<int>(largest) - 1;
}

std::vector<u32> TreeDecomposition::node_depths() const {
    std::vector<u32> depth(node_count(), 0);
    auto ch = children();
    std::queue<u32> queue;
    int r = root();
    if (r < 0) return depth;
    queue.push(static_cast<u32>(r));
    while (!queue.empty()) {
        u32 v = queue.front();
        queue.pop();
        for (u32 c : ch[v]) {
            depth[c] = depth[v] + 1;
            queue.push(c);
        }
    }
    return depth;
}

u32 TreeDecomposition::levels() const {
    u32 max_depth = 0;
    for (u32 d : node_depths()) max_depth = std::max(max_depth, d);
    return node_count() == 0 ? 0 : max_depth + 1;
}

int TreeDecomposition::depth() const {
    u32 max_depth = 0;
    for (u32 d : node_depths()) max_depth = std::max(max_depth, d);
    return std::max(width(), static_cast<int>(max_depth));
}

TdValidation validate_tree_decomposition(const Graph& h, const TreeDecomposition& td) {
    auto fail = [](std::string reason) { return TdValidation{false, std::move(reason)}; };
    const u32 nodes = td.node_count();
    if (td.parent.size() != td.bags.size()) return fail("parent/bag size mismatch");
    if (nodes == 0) return fail("empty decomposition");

    int roots = 0;
    for (u32 i = 0; i < nodes; ++i) {
        if (td.parent[i] < 0)
            ++roots;
        else if (static_cast<u32>(td.parent[i]) >= nodes)
            return fail("parent of node " + std::to_string(i) + " out of range");
    }
    if (roots != 1) return fail("expected exactly one root, found " + std::to_string(roots));
    // Acyclicity: every node must reach the root.
    for (u32 i = 0; i < nodes; ++i) {
        u32 steps = 0;
        int cur = static_cast<int>(i);
        while (td.parent[cur] >= 0) {
            cur = td.parent[cur];
            if (++steps > nodes) return fail("parent pointers contain a cycle");
        }
    }

    for (u32 i = 0; i < nodes; ++i)
        for (u32 v : td.bags[i])
            if (v == 0 || v > h.vertex_count())
                return fail("bag " + std::to_string(i) + " references missing vertex " + std::to_string(v));

    // Every vertex occurs in a connected, nonempty set of nodes.
    auto ch = td.children();
    for (u32 v = 1; v <= h.vertex_count(); ++v) {
        std::vector<u32> holders;
        for (u32 i = 0; i < nodes; ++i)
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) holders.push_back(i);
        if (holders.empty()) return fail("vertex " + std::to_string(v) + " appears in no bag");
        std::vector<bool> in_set(nodes, false);
        for (u32 i : holders) in_set[i] = true;
        std::vector<bool> seen(nodes, false);
        std::queue<u32> queue;
        queue.push(holders[0]);
        seen[holders[0]] = true;
        u32 reached = 0;
        while (!queue.empty()) {
            u32 x = queue.front();
            queue.pop();
            ++reached;
            auto visit = [&](u32 y) {
                if (in_set[y] && !seen[y]) {
                    seen[y] = true;
                    queue.push(y);
                }
            };
            if (td.parent[x] >= 0) visit(static_cast<u32>(td.parent[x]));
            for (u32 c : ch[x]) visit(c);
        }
        if (reached != holders.size())
            return fail("occurrences of vertex " + std::to_string(v) + " are disconnected");
    }

    for (const auto& [u, v] : h.edges()) {
        bool covered = false;
        for (u32 i = 0; i < nodes && !covered; ++i)
            covered = std::binary_search(td.bags[i].begin(), td.bags[i].end(), u) &&
                      std::binary_search(td.bags[i].begin(), td.bags[i].end(), v);
        if (!covered)
            return fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} not covered by any bag");
    }
    return {};
}

namespace {

// Width of the best elimination order: classic subset DP. q(S,v) counts the
// vertices outside S∪{v} reachable from v through S.
u32 reach_degree(const Graph& h, u32 inside_mask, u32 v) {
    const u32 n = h.vertex_count();
    u32 seen = u32{1} << (v - 1);
    std::vector<u32> stack{v};
    u32 count = 0;
    while (!stack.empty()) {
        u32 x = stack.back();
        stack.pop_back();
        for (u32 w : h.undirected_neighbors(x)) {
            u32 bit = u32{1} << (w - 1);
            if (seen & bit) continue;
            seen |= bit;
            if (inside_mask & bit) {
                stack.push_back(w);
            } else {
                ++count;
            }
        }
    }
    (void)n;
    return count;
}

} // namespace

TreeDecomposition exact_tree_decomposition(const Graph& h) {
    const u32 n = h.vertex_count();
    if (n > 8) throw guard_error("exact tree decomposition guarded to 8 vertices, got " + std::to_string(n));
    if (n == 0) throw domain_error("cannot decompose the empty graph");

    const u32 full = (u32{1} << n) - 1;
    std::vector<u32> best(full + 1, ~u32{0});
    std::vector<u32> pick(full + 1, 0);
    best[0] = 0;
    for (u32 mask = 1; mask <= full; ++mask) {
        for (u32 v = 1; v <= n; ++v) {
            u32 bit = u32{1} << (v - 1);
            if (!(mask & bit)) continue;
            u32 rest = mask ^ bit;
            if (best[rest] == ~u32{0}) continue;
            u32 width = std::max(best[rest], reach_degree(h, rest, v));
            if (width < best[mask]) {
                best[mask] = width;
                pick[mask] = v;
            }
        }
    }

    // Recover the elimination order (first eliminated first).
    std::vector<u32> order;
    u32 mask = full;
    while (mask) {
        u32 v = pick[mask];
        order.push_back(v);
        mask ^= u32{1} << (v - 1);
    }
    std::reverse(order.begin(), order.end());

    // Simulate elimination on a fill-in copy to collect bags.
    std::vector<u32> adj(n + 1, 0);
    for (const auto& [u, v] : h.edges()) {
        adj[u] |= u32{1} << (v - 1);
        adj[v] |= u32{1} << (u - 1);
    }
    std::vector<u32> position(n + 1, 0);
    for (u32 i = 0; i < n; ++i) position[order[i]] = i;
    std::vector<std::vector<u32>> bags(n);
    std::vector<int> parent(n, -1);
    std::vector<u32> bag_neighbors(n, 0);
    u32 remaining = full;
    for (u32 i = 0; i < n; ++i) {
        u32 v = order[i];
        remaining ^= u32{1} << (v - 1);
        u32 nb = adj[v] & remaining;
        bag_neighbors[i] = nb;
        std::vector<u32> bag{v};
        for (u32 w = 1; w <= n; ++w)
            if (nb & (u32{1} << (w - 1))) bag.push_back(w);
        std::sort(bag.begin(), bag.end());
        bags[i] = std::move(bag);
        // Eliminating v joins its remaining neighborhood into a clique.
        for (u32 a = 1; a <= n; ++a)
            if (nb & (u32{1} << (a - 1))) adj[a] |= nb & ~(u32{1} << (a - 1));
    }
    // Node for elimination step i hangs under the node of the earliest later
    // eliminated bag neighbor; component roots chain to the global root.
    for (u32 i = 0; i < n; ++i) {
        u32 nb = bag_neighbors[i];
        u32 best_pos = ~u32{0};
        for (u32 w = 1; w <= n; ++w)
            if (nb & (u32{1} << (w - 1))) best_pos = std::min(best_pos, position[w]);
        if (best_pos != ~u32{0})
            parent[i] = static_cast<int>(best_pos);
        else if (i + 1 < n)
            parent[i] = static_cast<int>(n - 1);
    }

    TreeDecomposition td{std::move(parent), std::move(bags)};
    auto check = validate_tree_decomposition(h, td);
    if (!check.valid) throw std::logic_error("exact decomposition invalid: " + check.reason);
    return td;
}

} // namespace ccg
