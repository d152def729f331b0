#include "ccg/pattern.hpp"

#include <algorithm>

namespace ccg {

PatternSpec PatternSpec::copies_of(Graph h0, u32 k) {
    PatternSpec s;
    s.kind = Kind::copies;
    s.component = std::move(h0);
    s.k = k;
    return s;
}

PatternSpec PatternSpec::multiset_of(std::vector<Graph> graphs) {
    PatternSpec s;
    s.kind = Kind::multiset;
    s.components = std::move(graphs);
    return s;
}

PatternSpec PatternSpec::cycles_of(u32 k, u32 l) {
    PatternSpec s;
    s.kind = Kind::cycles;
    s.k = k;
    s.l = l;
    return s;
}

PatternSpec PatternSpec::paths_of(u32 k, u32 l, bool directed) {
    PatternSpec s;
    s.kind = Kind::paths;
    s.k = k;
    s.l = l;
    s.directed = directed;
    return s;
}

PatternSpec PatternSpec::forest_of(Graph forest, u32 k) {
    PatternSpec s;
    s.kind = Kind::forest;
    s.component = std::move(forest);
    s.k = k;
    return s;
}

PatternSpec PatternSpec::anchored_path_of(u32 edge_count, bool directed) {
    PatternSpec s;
    s.kind = Kind::anchored_path;
    s.length = edge_count;
    s.directed = directed;
    return s;
}

namespace {

struct Builder {
    Graph h;
    TreeDecomposition td;
    u32 vertex_offset = 0;

    explicit Builder(u32 total_vertices, bool directed) : h(total_vertices, directed) {
        td.parent.push_back(-1);     // synthetic root, empty bag
        td.bags.push_back({});
    }

    u32 add_node(std::vector<u32> bag, int parent) {
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(std::move(bag));
        td.parent.push_back(parent);
        return static_cast<u32>(td.bags.size()) - 1;
    }

    // Appends one copy of `component` (vertices shifted), one bag per copy.
    void add_component_single_bag(const Graph& component) {
        std::vector<u32> bag;
        for (u32 v = 1; v <= component.vertex_count(); ++v) bag.push_back(vertex_offset + v);
        for (const auto& [u, v] : component.edges()) h.add_edge(vertex_offset + u, vertex_offset + v);
        add_node(std::move(bag), 0);
        vertex_offset += component.vertex_count();
    }

    // Grafts an existing decomposition of `component` under the root.
    void add_component_with_td(const Graph& component, const TreeDecomposition& sub) {
        for (const auto& [u, v] : component.edges()) h.add_edge(vertex_offset + u, vertex_offset + v);
        const u32 node_offset = static_cast<u32>(td.bags.size());
        for (u32 i = 0; i < sub.node_count(); ++i) {
            std::vector<u32> bag;
            for (u32 v : sub.bags[i]) bag.push_back(vertex_offset + v);
            std::sort(bag.begin(), bag.end());
            td.bags.push_back(std::move(bag));
            td.parent.push_back(sub.parent[i] < 0 ? 0 : static_cast<int>(node_offset) + sub.parent[i]);
        }
        vertex_offset += component.vertex_count();
    }
};

Graph cycle_graph(u32 l) {
    Graph g(l, false);
    for (u32 i = 1; i < l; ++i) g.add_edge(i, i + 1);
    g.add_edge(l, 1);
    return g;
}

bool is_forest(const Graph& g) {
    if (g.directed()) return false;
    // Acyclic iff every component has |E| = |V| - 1.
    auto comps = connected_components(g);
    u32 tree_edges = 0;
    for (const auto& c : comps) tree_edges += static_cast<u32>(c.size()) - 1;
    return tree_edges == g.edge_count();
}

// Width-1 chain over a rooted spanning tree: bag {v, parent(v)} per non-root.
TreeDecomposition forest_chain_td(const Graph& component) {
    const u32 n = component.vertex_count();
    TreeDecomposition td;
    std::vector<int> tree_parent(n + 1, 0);
    std::vector<int> node_of(n + 1, -1);
    std::vector<u32> order;
    std::vector<bool> seen(n + 1, false);
    for (u32 root = 1; root <= n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::vector<u32> stack{root};
        tree_parent[root] = -1;
        while (!stack.empty()) {
            u32 v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (u32 w : component.undirected_neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    tree_parent[w] = static_cast<int>(v);
                    stack.push_back(w);
                }
        }
    }
    for (u32 v : order) {
        std::vector<u32> bag;
        if (tree_parent[v] < 0)
            bag = {v};
        else
            bag = {std::min(v, static_cast<u32>(tree_parent[v])), std::max(v, static_cast<u32>(tree_parent[v]))};
        td.bags.push_back(std::move(bag));
        int parent_node = tree_parent[v] < 0 ? -1 : node_of[static_cast<u32>(tree_parent[v])];
        td.parent.push_back(parent_node);
        node_of[v] = static_cast<int>(td.bags.size()) - 1;
    }
    // Multiple spanning-tree roots: chain extras under the first.
    int first_root = -1;
    for (u32 i = 0; i < td.node_count(); ++i) {
        if (td.parent[i] < 0) {
            if (first_root < 0)
                first_root = static_cast<int>(i);
            else
                td.parent[i] = first_root;
        }
    }
    return td;
}

} // namespace

Pattern build_pattern(const PatternSpec& spec) {
    using Kind = PatternSpec::Kind;
    Pattern out;
    switch (spec.kind) {
        case Kind::copies: {
            if (spec.k == 0) throw domain_error("copy count must be positive");
            if (spec.component.vertex_count() == 0) throw domain_error("empty pattern component");
            if (spec.component.vertex_count() > 8)
                throw guard_error("explicit pattern components are limited to 8 vertices");
            Builder b(spec.component.vertex_count() * spec.k, false);
            for (u32 i = 0; i < spec.k; ++i) b.add_component_single_bag(spec.component);
            out.h = std::move(b.h);
            out.td = std::move(b.td);
            break;
        }
        case Kind::multiset: {
            if (spec.components.empty()) throw domain_error("empty pattern multiset");
            u32 total = 0;
            for (const auto& c : spec.components) {
                if (c.vertex_count() == 0) throw domain_error("empty pattern component");
                if (c.vertex_count() > 8)
                    throw guard_error("explicit pattern components are limited to 8 vertices");
                total += c.vertex_count();
            }
            Builder b(total, false);
            for (const auto& c : spec.components) b.add_component_single_bag(c);
            out.h = std::move(b.h);
            out.td = std::move(b.td);
            break;
        }
        case Kind::cycles: {
            if (spec.k == 0) throw domain_error("copy count must be positive");
            if (spec.l < 3) throw domain_error("cycle length must be at least 3");
            Builder b(spec.k * spec.l, false);
            Graph cl = cycle_graph(spec.l);
            for (u32 copy = 0; copy < spec.k; ++copy) {
                const u32 base = b.vertex_offset;
                for (const auto& [u, v] : cl.edges()) b.h.add_edge(base + u, base + v);
                // Fan triangulation: {v1, vj, vj+1} chained, width 2.
                int parent = 0;
                if (spec.l == 3) {
                    b.add_node({base + 1, base + 2, base + 3}, parent);
                } else {
                    for (u32 j = 2; j < spec.l; ++j)
                        parent = static_cast<int>(b.add_node({base + 1, base + j, base + j + 1}, parent));
                }
                b.vertex_offset += spec.l;
            }
            out.h = std::move(b.h);
            out.td = std::move(b.td);
            break;
        }
        case Kind::paths: {
            if (spec.k == 0) throw domain_error("copy count must be positive");
            if (spec.l < 1) throw domain_error("path vertex count must be positive");
            Builder b(spec.k * spec.l, spec.directed);
            for (u32 copy = 0; copy < spec.k; ++copy) {
                const u32 base = b.vertex_offset;
                for (u32 j = 1; j < spec.l; ++j) b.h.add_edge(base + j, base + j + 1);
                int parent = 0;
                if (spec.l == 1) {
                    b.add_node({base + 1}, parent);
                } else {
                    for (u32 j = 1; j < spec.l; ++j)
                        parent = static_cast<int>(b.add_node({base + j, base + j + 1}, parent));
                }
                b.vertex_offset += spec.l;
            }
            out.h = std::move(b.h);
            out.td = std::move(b.td);
            break;
        }
        case Kind::forest: {
            if (spec.k == 0) throw domain_error("copy count must be positive");
            if (spec.component.vertex_count() == 0) throw domain_error("empty forest");
            if (!is_forest(spec.component)) throw domain_error("forest pattern contains a cycle");
            // Split the forest into components; decompose each exactly when
            // small, else via a rooted spanning chain.
            auto comps = connected_components(spec.component);
            Builder b(spec.component.vertex_count() * spec.k, false);
            for (u32 copy = 0; copy < spec.k; ++copy) {
                for (const auto& comp : comps) {
                    std::vector<u32> local(spec.component.vertex_count() + 1, 0);
                    for (u32 i = 0; i < comp.size(); ++i) local[comp[i]] = i + 1;
                    Graph sub(static_cast<u32>(comp.size()), false);
                    for (const auto& [u, v] : spec.component.edges())
                        if (local[u] && local[v]) sub.add_edge(local[u], local[v]);
                    TreeDecomposition sub_td =
                        comp.size() <= 8 ? exact_tree_decomposition(sub) : forest_chain_td(sub);
                    b.add_component_with_td(sub, sub_td);
                }
            }
            out.h = std::move(b.h);
            out.td = std::move(b.td);
            break;
        }
        case Kind::anchored_path: {
            const u32 verts = spec.length + 1;
            Graph path(verts, spec.directed);
            for (u32 j = 1; j < verts; ++j) path.add_edge(j, j + 1);
            TreeDecomposition td;
            if (verts == 1) {
                td.bags.push_back({1});
                td.parent.push_back(-1);
            } else {
                for (u32 j = 1; j < verts; ++j) {
                    td.bags.push_back({j, j + 1});
                    td.parent.push_back(j == 1 ? -1 : static_cast<int>(j) - 2);
                }
            }
            out.h = std::move(path);
            out.td = std::move(td);
            out.first_vertex = 1;
            out.last_vertex = verts;
            break;
        }
    }
    auto check = validate_tree_decomposition(out.h, out.td);
    if (!check.valid) throw std::logic_error("pattern decomposition invalid: " + check.reason);
    return out;
}

} // namespace ccg
