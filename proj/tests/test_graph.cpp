#include <doctest.h>

#include <random>

#include "ccg/pattern.hpp"
#include "ccg/treedec.hpp"
#include "support.hpp"

using namespace ccg;
using namespace ccg::testing;

TEST_CASE("parse and serialize") {
    Graph p3 = parse_graph("3 2\n1 2\n2 3\n");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(1, 2));
    CHECK(p3.has_edge(2, 3));
    CHECK_FALSE(p3.has_edge(1, 3));

    CHECK_THROWS_WITH_AS(parse_graph("2 1\n1 1\n"), "self-loop at line 2", parse_error);
    CHECK_THROWS_AS(parse_graph("2 2\n1 2\n2 1\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("2 1\n1 3\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("nonsense\n"), parse_error);
    CHECK_THROWS_AS(parse_graph(""), parse_error);
    CHECK_THROWS_AS(parse_graph("3 2\n1 2\n"), parse_error);

    Graph arc = parse_graph("3 1 directed\n1 3\n");
    CHECK(arc.directed());
    CHECK(arc.has_edge(1, 3));
    CHECK_FALSE(arc.has_edge(3, 1));

    // comments, whitespace normalization, canonical edge order
    Graph messy = parse_graph("# a comment\n3   2\n2 3\n# middle\n2  1\n");
    CHECK(serialize_graph(messy) == "3 2\n1 2\n2 3\n");
    CHECK(serialize_graph(parse_graph(serialize_graph(messy))) == serialize_graph(messy));

    Graph labeled = parse_graph("3 1\n1 2\nlabels 2 3\n");
    CHECK(labeled.has_label(2));
    CHECK(labeled.has_label(3));
    CHECK_FALSE(labeled.has_label(1));
    CHECK(serialize_graph(labeled) == "3 1\n1 2\nlabels 2 3\n");
    CHECK(parse_graph(serialize_graph(labeled)) == labeled);
}

TEST_CASE("ball extraction") {
    Graph p5 = path_graph(5);
    BallView mid = ball(p5, 3, 1);
    CHECK(mid.graph.vertex_count() == 3);
    CHECK(mid.graph.edge_count() == 2);
    CHECK(mid.to_host == std::vector<u32>{2, 3, 4});
    CHECK(mid.to_host[mid.center - 1] == 3);

    BallView zero = ball(p5, 2, 0);
    CHECK(zero.graph.vertex_count() == 1);
    CHECK(zero.graph.edge_count() == 0);

    BallView whole = ball(cycle_graph(6), 1, 3);
    CHECK(whole.graph.vertex_count() == 6);
    CHECK(whole.graph.edge_count() == 6);
}

TEST_CASE("ball agrees with BFS distances") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(7, 0.4, rng);
        for (u32 r = 0; r <= 3; ++r) {
            BallView view = ball(g, 1, r);
            auto dist = bfs_distances(g, 1, true);
            std::vector<u32> expected;
            for (u32 v = 1; v <= 7; ++v)
                if (dist[v] != ~u32{0} && dist[v] <= r) expected.push_back(v);
            CHECK(view.to_host == expected);
        }
    }
}

TEST_CASE("complement") {
    Graph k3 = clique_graph(3);
    CHECK(complement(k3).edge_count() == 0);
    Graph e2 = empty_graph(2);
    CHECK(complement(e2).edge_count() == 1);
    CHECK_THROWS_AS(complement(Graph(2, {{1, 2}}, true)), domain_error);

    // involution on every labeled graph with <= 6 vertices
    for (u32 n = 1; n <= 6; ++n) {
        for (u64 mask = 0; mask < (u64{1} << pair_count(n)); ++mask) {
            Graph g = graph_from_mask(n, mask);
            CHECK(complement(complement(g)) == g);
        }
    }
}

TEST_CASE("tree decomposition validation") {
    Graph p3 = path_graph(3);
    TreeDecomposition good{{-1, 0}, {{1, 2}, {2, 3}}};
    auto ok = validate_tree_decomposition(p3, good);
    CHECK(ok.valid);
    CHECK(good.width() == 1);

    Graph k3 = clique_graph(3);
    TreeDecomposition one_bag{{-1}, {{1, 2, 3}}};
    CHECK(validate_tree_decomposition(k3, one_bag).valid);
    CHECK(one_bag.width() == 2);

    TreeDecomposition uncovered{{-1, 0}, {{1, 2}, {3}}};
    auto bad = validate_tree_decomposition(p3, uncovered);
    CHECK_FALSE(bad.valid);
    CHECK(bad.reason.find("{2,3}") != std::string::npos);

    TreeDecomposition disconnected{{-1, 0, 1}, {{1}, {2}, {1, 3}}};
    CHECK_FALSE(validate_tree_decomposition(path_graph(3), disconnected).valid);

    TreeDecomposition two_roots{{-1, -1}, {{1, 2}, {2, 3}}};
    CHECK_FALSE(validate_tree_decomposition(p3, two_roots).valid);

    TreeDecomposition missing_vertex{{-1}, {{1, 2}}};
    CHECK_FALSE(validate_tree_decomposition(path_graph(3), missing_vertex).valid);
}

TEST_CASE("exact tree decomposition") {
    CHECK(exact_tree_decomposition(clique_graph(3)).width() == 2);
    CHECK(exact_tree_decomposition(path_graph(4)).width() == 1);
    CHECK(exact_tree_decomposition(clique_graph(4)).width() == 3);
    CHECK(exact_tree_decomposition(cycle_graph(4)).width() == 2);
    CHECK(exact_tree_decomposition(empty_graph(3)).width() == 0);
    CHECK_THROWS_AS(exact_tree_decomposition(path_graph(9)), guard_error);

    // width optimality vs a brute-force elimination-order oracle, and
    // validity on every graph up to 5 vertices
    for (u32 n = 1; n <= 5; ++n) {
        for (u64 mask = 0; mask < (u64{1} << pair_count(n)); ++mask) {
            Graph g = graph_from_mask(n, mask);
            TreeDecomposition td = exact_tree_decomposition(g);
            CHECK(validate_tree_decomposition(g, td).valid);

            // oracle: min over all elimination orders of the max fill degree
            std::vector<u32> order(n);
            for (u32 i = 0; i < n; ++i) order[i] = i + 1;
            u32 best = n;
            do {
                std::vector<u64> adj(n + 1, 0);
                for (const auto& [u, v] : g.edges()) {
                    adj[u] |= u64{1} << v;
                    adj[v] |= u64{1} << u;
                }
                u64 remaining = 0;
                for (u32 v = 1; v <= n; ++v) remaining |= u64{1} << v;
                u32 width = 0;
                for (u32 v : order) {
                    remaining &= ~(u64{1} << v);
                    u64 nb = adj[v] & remaining;
                    width = std::max(width, static_cast<u32>(__builtin_popcountll(nb)));
                    for (u32 w = 1; w <= n; ++w)
                        if (nb & (u64{1} << w)) adj[w] |= nb & ~(u64{1} << w);
                }
                best = std::min(best, width);
            } while (std::next_permutation(order.begin(), order.end()));
            CHECK(td.width() == static_cast<int>(best));
        }
    }
}

TEST_CASE("pattern constructors") {
    Pattern m3 = build_pattern(PatternSpec::copies_of(clique_graph(2), 3));
    CHECK(m3.h.vertex_count() == 6);
    CHECK(m3.h.edge_count() == 3);
    CHECK(m3.td.width() == 1);
    CHECK(m3.td.depth() == 1);
    CHECK(validate_tree_decomposition(m3.h, m3.td).valid);

    Pattern t2 = build_pattern(PatternSpec::copies_of(clique_graph(3), 2));
    CHECK(t2.td.width() == 2);
    CHECK(validate_tree_decomposition(t2.h, t2.td).valid);

    Pattern c4 = build_pattern(PatternSpec::cycles_of(1, 4));
    CHECK(c4.h.vertex_count() == 4);
    CHECK(c4.h.edge_count() == 4);
    CHECK(c4.td.width() == 2);
    CHECK(validate_tree_decomposition(c4.h, c4.td).valid);
    CHECK(exact_tree_decomposition(c4.h).width() == 2);

    CHECK_THROWS_AS(build_pattern(PatternSpec::cycles_of(1, 2)), domain_error);
    CHECK_THROWS_AS(build_pattern(PatternSpec::copies_of(clique_graph(9), 1)), guard_error);

    // validity across the constructor grid of kinds and sizes
    for (u32 k = 1; k <= 3; ++k) {
        for (u32 l = 3; l <= 5; ++l) {
            Pattern cyc = build_pattern(PatternSpec::cycles_of(k, l));
            CHECK(validate_tree_decomposition(cyc.h, cyc.td).valid);
            CHECK(cyc.td.width() == 2);
        }
        for (u32 l = 1; l <= 4; ++l) {
            Pattern pth = build_pattern(PatternSpec::paths_of(k, l));
            CHECK(validate_tree_decomposition(pth.h, pth.td).valid);
            CHECK(pth.td.width() <= 1);
        }
    }

    Graph forest(6, {{1, 2}, {2, 3}, {4, 5}}, false);
    Pattern f = build_pattern(PatternSpec::forest_of(forest));
    CHECK(validate_tree_decomposition(f.h, f.td).valid);
    CHECK(f.td.width() <= 1);
    CHECK_THROWS_AS(build_pattern(PatternSpec::forest_of(cycle_graph(3))), domain_error);

    Pattern anchored = build_pattern(PatternSpec::anchored_path_of(2));
    CHECK(anchored.first_vertex == 1);
    CHECK(anchored.last_vertex == 3);
    CHECK(validate_tree_decomposition(anchored.h, anchored.td).valid);

    Pattern multi = build_pattern(
        PatternSpec::multiset_of({clique_graph(2), clique_graph(3), path_graph(3)}));
    CHECK(multi.h.vertex_count() == 8);
    CHECK(validate_tree_decomposition(multi.h, multi.td).valid);
}
