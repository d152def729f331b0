#include <doctest.h>

#include <random>

#include "ccg/local.hpp"
#include "ccg/oracle.hpp"
#include "support.hpp"

using namespace ccg;
using namespace ccg::testing;

namespace {

const LocalPredicate always = [](const Graph&, u32) { return true; };
const LocalPredicate has_edge_pred = [](const Graph& b, u32) { return b.edge_count() >= 1; };
const LocalPredicate center_deg2 = [](const Graph& b, u32 center) {
    return b.degree(center) >= 2;
};

} // namespace

TEST_CASE("scattered balls: spec fixtures") {
    // three isolated vertices, radius zero
    LocalResult iso = scattered_balls(empty_graph(3), 2, 0, always);
    CHECK(iso.found);
    REQUIRE(iso.witness);
    CHECK(iso.witness->centers.size() == 2);

    // P3 endpoints sit at distance 2, not > 2
    CHECK_FALSE(scattered_balls(path_graph(3), 2, 1, always).found);

    // P5 endpoints work
    LocalResult p5 = scattered_balls(path_graph(5), 2, 1, always);
    CHECK(p5.found);
    REQUIRE(p5.witness);
    CHECK_FALSE(check_balls(path_graph(5), *p5.witness, 2, 1, always));

    CHECK_THROWS_AS(scattered_balls(path_graph(3), 0, 1, always), domain_error);
}

TEST_CASE("scattered balls: family parameters match the proof shape") {
    Graph p5 = path_graph(5);
    LocalResult r = scattered_balls(p5, 2, 1, always);
    // max degree 2: ball bound M = 2r + 1
    CHECK(r.ball_bound == 3);
    CHECK(r.family.n == 5);
    CHECK(r.family.k == std::min<u32>(r.ball_bound * 2, 5));
    CHECK(r.family.c == 3);

    Graph star = star_graph(4);   // max degree 4, r = 1: M = 1 + 4 = 5
    LocalResult s = scattered_balls(star, 1, 1, always);
    CHECK(s.ball_bound == 5);
    CHECK(s.family.k == 5);
}

TEST_CASE("scattered balls: oracle agreement on a corpus") {
    std::vector<Graph> graphs = nonisomorphic_graphs(5);
    std::mt19937 rng(31);
    for (int i = 0; i < 25; ++i) graphs.push_back(random_graph(7, 0.3, rng));
    for (int i = 0; i < 10; ++i) graphs.push_back(random_graph(8, 0.2, rng));

    const std::vector<std::pair<const char*, LocalPredicate>> preds{
        {"true", always}, {"edge", has_edge_pred}, {"deg2", center_deg2}};
    for (const auto& g : graphs) {
        for (u32 k = 1; k <= 2; ++k)
            for (u32 r = 0; r <= 2; ++r)
                for (const auto& [name, pred] : preds) {
                    bool expected = oracle::scattered_balls(g, k, r, pred).has_value();
                    LocalResult got = scattered_balls(g, k, r, pred);
                    CAPTURE(serialize_graph(g));
                    CAPTURE(k);
                    CAPTURE(r);
                    CAPTURE(name);
                    CHECK(got.found == expected);
                    if (got.found)
                        CHECK_FALSE(check_balls(g, *got.witness, k, r, pred));
                }
    }
}

TEST_CASE("scattered balls: deterministic across thread counts") {
    Graph g = disjoint_union(path_graph(4), star_graph(3));
    RunOptions one;
    one.threads = 1;
    RunOptions many;
    many.threads = 4;
    LocalResult a = scattered_balls(g, 2, 1, always, one);
    LocalResult b = scattered_balls(g, 2, 1, always, many);
    CHECK(a.found == b.found);
    REQUIRE(a.witness);
    REQUIRE(b.witness);
    CHECK(a.witness->centers == b.witness->centers);
    CHECK(a.stats.colorings_checked == b.stats.colorings_checked);
}
