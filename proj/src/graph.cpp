#include "ccg/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace ccg {

Graph::Graph(u32 vertex_count, bool directed)
    : n_(vertex_count),
      directed_(directed),
      adj_(vertex_count + 1),
      in_adj_(vertex_count + 1),
      und_adj_(vertex_count + 1),
      matrix_((static_cast<u64>(vertex_count) * vertex_count + 63) / 64, 0) {}

Graph::Graph(u32 vertex_count, const std::vector<std::pair<u32, u32>>& edges, bool directed)
    : Graph(vertex_count, directed) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_v(u32 v) const {
    if (v == 0 || v > n_) throw domain_error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

void Graph::add_edge(u32 u, u32 v) {
    check_v(u);
    check_v(v);
    if (u == v) throw domain_error("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) throw domain_error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    std::pair<u32, u32> e = directed_ ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
    matrix_[bit_index(u, v) / 64] |= u64{1} << (bit_index(u, v) % 64);
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    in_adj_[v].insert(std::lower_bound(in_adj_[v].begin(), in_adj_[v].end(), u), u);
    if (!directed_) {
        matrix_[bit_index(v, u) / 64] |= u64{1} << (bit_index(v, u) % 64);
        adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
        in_adj_[u].insert(std::lower_bound(in_adj_[u].begin(), in_adj_[u].end(), v), v);
    }
    auto und_insert = [&](u32 a, u32 b) {
        auto it = std::lower_bound(und_adj_[a].begin(), und_adj_[a].end(), b);
        if (it == und_adj_[a].end() || *it != b) und_adj_[a].insert(it, b);
    };
    und_insert(u, v);
    und_insert(v, u);
}

bool Graph::has_edge(u32 u, u32 v) const {
    check_v(u);
    check_v(v);
    if (u == v) return false;
    return (matrix_[bit_index(u, v) / 64] >> (bit_index(u, v) % 64)) & 1;
}

bool Graph::has_undirected(u32 u, u32 v) const {
    return has_edge(u, v) || (directed_ && has_edge(v, u));
}

bool Graph::has_label(u32 v) const {
    return std::binary_search(labels_.begin(), labels_.end(), v);
}

void Graph::set_labels(std::vector<u32> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (u32 v : labels) check_v(v);
    labels_ = std::move(labels);
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && directed_ == other.directed_ && edges_ == other.edges_ &&
           labels_ == other.labels_;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

bool parse_u32(const std::string& tok, u32& out) {
    if (tok.empty() || tok.size() > 9) return false;
    u64 val = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') return false;
        val = val * 10 + static_cast<u64>(ch - '0');
    }
    out = static_cast<u32>(val);
    return true;
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    u32 n = 0, m = 0;
    bool directed = false;
    Graph g;
    u32 edges_read = 0;
    bool have_labels = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string at = " at line " + std::to_string(line_no);
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (!have_header) {
            if (toks.size() < 2 || toks.size() > 3 || !parse_u32(toks[0], n) || !parse_u32(toks[1], m))
                throw parse_error("malformed header" + at);
            if (toks.size() == 3) {
                if (toks[2] != "directed") throw parse_error("malformed header" + at);
                directed = true;
            }
            g = Graph(n, directed);
            have_header = true;
            continue;
        }
        if (toks[0] == "labels") {
            if (edges_read < m) throw parse_error("labels before all edges" + at);
            if (have_labels) throw parse_error("duplicate labels section" + at);
            std::vector<u32> labels;
            for (size_t i = 1; i < toks.size(); ++i) {
                u32 v;
                if (!parse_u32(toks[i], v) || v == 0 || v > n)
                    throw parse_error("label vertex out of range" + at);
                labels.push_back(v);
            }
            g.set_labels(std::move(labels));
            have_labels = true;
            continue;
        }
        if (edges_read >= m) throw parse_error("unexpected extra line" + at);
        u32 u, v;
        if (toks.size() != 2 || !parse_u32(toks[0], u) || !parse_u32(toks[1], v))
            throw parse_error("malformed edge" + at);
        if (u == 0 || u > n || v == 0 || v > n)
            throw parse_error("vertex index out of range" + at);
        if (u == v) throw parse_error("self-loop" + at);
        if (g.has_edge(u, v) || (!directed && g.has_edge(v, u)))
            throw parse_error("duplicate edge" + at);
        g.add_edge(u, v);
        ++edges_read;
    }
    if (!have_header) throw parse_error("missing header at line " + std::to_string(line_no + 1));
    if (edges_read < m)
        throw parse_error("expected " + std::to_string(m) + " edges, got " + std::to_string(edges_read));
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count();
    if (g.directed()) out << " directed";
    out << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (!g.labels().empty()) {
        out << "labels";
        for (u32 v : g.labels()) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::vector<u32> bfs_distances(const Graph& g, u32 source, bool ignore_direction) {
    std::vector<u32> dist(g.vertex_count() + 1, ~u32{0});
    std::queue<u32> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        u32 v = queue.front();
        queue.pop();
        const auto& next = ignore_direction ? g.undirected_neighbors(v) : g.neighbors(v);
        for (u32 w : next) {
            if (dist[w] == ~u32{0}) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

BallView ball(const Graph& g, u32 center, u32 radius) {
    auto dist = bfs_distances(g, center, /*ignore_direction=*/true);
    std::vector<u32> members;
    for (u32 v = 1; v <= g.vertex_count(); ++v)
        if (dist[v] != ~u32{0} && dist[v] <= radius) members.push_back(v);
    std::vector<u32> local(g.vertex_count() + 1, 0);
    for (u32 i = 0; i < members.size(); ++i) local[members[i]] = i + 1;
    Graph sub(static_cast<u32>(members.size()), g.directed());
    for (const auto& [u, v] : g.edges())
        if (local[u] && local[v]) sub.add_edge(local[u], local[v]);
    BallView view;
    view.graph = std::move(sub);
    view.to_host = std::move(members);
    view.center = local[center];
    return view;
}

Graph complement(const Graph& g) {
    if (g.directed()) throw domain_error("complement requires an undirected graph");
    Graph out(g.vertex_count(), false);
    for (u32 u = 1; u <= g.vertex_count(); ++u)
        for (u32 v = u + 1; v <= g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

std::vector<std::vector<u32>> connected_components(const Graph& g) {
    std::vector<std::vector<u32>> comps;
    std::vector<bool> seen(g.vertex_count() + 1, false);
    for (u32 v = 1; v <= g.vertex_count(); ++v) {
        if (seen[v]) continue;
        std::vector<u32> comp;
        std::queue<u32> queue;
        queue.push(v);
        seen[v] = true;
        while (!queue.empty()) {
            u32 x = queue.front();
            queue.pop();
            comp.push_back(x);
            for (u32 w : g.undirected_neighbors(x))
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_clique(const Graph& g, const std::vector<u32>& vertices) {
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_undirected(vertices[i], vertices[j])) return false;
    return true;
}

} // namespace ccg
