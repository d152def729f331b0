#include <doctest.h>

#include "ccg/oracle.hpp"
#include "ccg/packing.hpp"
#include "support.hpp"

using namespace ccg;
using namespace ccg::testing;

TEST_CASE("pack: explicit multisets") {
    // two triangles into K6
    PackResult two_triangles = pack(clique_graph(6), {clique_graph(3), clique_graph(3)});
    CHECK(two_triangles.found);
    REQUIRE(two_triangles.witness);
    CHECK_FALSE(check_embedding(two_triangles.pattern, clique_graph(6), *two_triangles.witness));

    // C5 is triangle-free
    CHECK_FALSE(pack(cycle_graph(5), {clique_graph(3)}).found);

    // identity packing
    Graph host = disjoint_union(clique_graph(2), clique_graph(3));
    CHECK(pack(host, {clique_graph(2), clique_graph(3)}).found);

    CHECK_THROWS_AS(pack(clique_graph(3), {}), domain_error);
    CHECK_THROWS_AS(pack(clique_graph(6), {clique_graph(6)}), guard_error);
}

TEST_CASE("pack: cycles and paths") {
    Graph two_c4 = disjoint_union(cycle_graph(4), cycle_graph(4));
    CHECK(pack_cycles(two_c4, 2, 4).found);
    CHECK_FALSE(pack_cycles(clique_graph(5), 2, 3).found);   // needs 6 vertices
    CHECK(pack_cycles(clique_graph(4), 1, 3).found);
    CHECK_THROWS_AS(pack_cycles(clique_graph(4), 1, 2), domain_error);

    CHECK(pack_paths(path_graph(6), 2, 3).found);
    CHECK_FALSE(pack_paths(star_graph(4), 1, 4).found);
}

TEST_CASE("pack: forests") {
    Graph forest(5, {{1, 2}, {2, 3}, {4, 5}}, false);
    CHECK(pack_forest(path_graph(6), forest).found);
    CHECK_FALSE(pack_forest(star_graph(3), forest).found);
}

TEST_CASE("pack: oracle grid with monotonicity and witness disjointness") {
    std::vector<Graph> h0s{clique_graph(2), clique_graph(3), path_graph(3)};
    std::vector<Graph> hosts = nonisomorphic_graphs(5);
    {
        auto six = nonisomorphic_graphs(6);
        // thin the 6-vertex layer to keep the grid quick
        for (size_t i = 0; i < six.size(); i += 3) hosts.push_back(six[i]);
    }
    for (const auto& h0 : h0s) {
        for (const auto& host : hosts) {
            bool prev = true;
            for (u32 copies = 2; copies >= 1; --copies) {
                std::vector<Graph> components(copies, h0);
                PackResult got = pack(host, components);
                bool expected = oracle::pack(host, components).has_value();
                CAPTURE(serialize_graph(host));
                CAPTURE(copies);
                CHECK(got.found == expected);
                // monotonicity: success at k implies success at smaller k
                if (copies == 2) prev = got.found;
                if (copies == 1 && prev) CHECK(got.found);
                if (got.found) {
                    // disjointness across component images is injectivity of
                    // the union embedding
                    CHECK_FALSE(check_embedding(got.pattern, host, *got.witness));
                }
            }
        }
    }
}
