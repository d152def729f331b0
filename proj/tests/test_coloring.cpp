#include <doctest.h>

#include <set>

#include "ccg/coloring.hpp"

using namespace ccg;

namespace {

// Independent size oracle: literal summation over p and omega counts.
u64 size_by_summation(u64 p_bound, u64 c, u64 k) {
    u64 omegas = 1;
    for (u64 i = 0; i < k * k; ++i) omegas *= c;
    u64 total = 0;
    for (u64 p = 2; p <= p_bound; ++p) total += p * omegas;
    return total;
}

// Independent member oracle: decode index into (p, a, w) by scanning blocks.
std::vector<u32> member_by_decode(const FamilyParams& params, u64 index) {
    u64 omegas = 1;
    for (u64 i = 0; i < params.cells(); ++i) omegas *= params.c;
    u64 rest = index;
    u64 p = 2, a = 0;
    for (;; ++p) {
        if (rest < p * omegas) {
            a = rest / omegas;
            rest %= omegas;
            break;
        }
        rest -= p * omegas;
    }
    std::vector<u32> values;
    for (u32 x = 1; x <= params.n; ++x) {
        u64 cell = (a * x % p) % params.cells();
        u64 w = rest;
        for (u64 j = 0; j < cell; ++j) w /= params.c;
        values.push_back(static_cast<u32>(w % params.c) + 1);
    }
    return values;
}

} // namespace

TEST_CASE("family parameters and exact size") {
    FamilyParams params = family_params(8, 2, 2);
    CHECK(params.p_bound == 12);
    CHECK(family_size(params) == size_by_summation(12, 2, 2));
    CHECK(family_size(params) == 1232);
    // construction size bound: c^(k^2) * k^4 * log2(n)^2
    CHECK(family_size(params) <= 16 * 16 * 9);

    FamilyParams tiny = family_params(1, 1, 1);
    CHECK(family_size(tiny) == 2);
    for (u64 i = 0; i < 2; ++i) {
        Coloring coloring = get_coloring(tiny, i);
        CHECK(coloring.values == std::vector<u32>{1});
    }

    CHECK(family_size_decimal(params) == "1232");
    CHECK_THROWS_AS(family_params(4, 5, 2), domain_error);
    CHECK_THROWS_AS(family_params(0, 1, 1), domain_error);
    CHECK_THROWS_AS(family_params(4, 2, 0), domain_error);
    CHECK_THROWS_AS(family_params(4, 2, 2, 0), domain_error);
}

TEST_CASE("multiplier scales the prime bound") {
    FamilyParams base = family_params(8, 2, 2, 1);
    FamilyParams doubled = family_params(8, 2, 2, 2);
    CHECK(doubled.p_bound == 2 * base.p_bound);
    CHECK(family_size(doubled) > family_size(base));
}

TEST_CASE("member generation matches the construction") {
    FamilyParams params = family_params(8, 2, 2);
    // index 0: p=2, a=0, omega constant 1
    Coloring first = get_coloring(params, 0);
    CHECK(first.values == std::vector<u32>(8, 1));
    // hash arithmetic: (2*3 mod 5) mod 4 = 1
    CHECK(cell_of(params, Block{5, 2}, 3) == 1);

    for (u64 index : {u64{0}, u64{1}, u64{17}, u64{500}, u64{1231}}) {
        Coloring coloring = get_coloring(params, index);
        CHECK(coloring.values == member_by_decode(params, index));
        // determinism: regenerating reproduces identical values
        CHECK(get_coloring(params, index).values == coloring.values);
    }
    CHECK_THROWS_AS(get_coloring(params, family_size(params)), domain_error);
}

TEST_CASE("block enumeration is a bijection") {
    FamilyParams params = family_params(6, 2, 3);
    std::set<std::pair<u64, u64>> blocks;
    for (u64 b = 0; b < block_count(params); ++b) {
        Block blk = block_at(params, b);
        CHECK(blk.p >= 2);
        CHECK(blk.p <= params.p_bound);
        CHECK(blk.a < blk.p);
        blocks.insert({blk.p, blk.a});
    }
    CHECK(blocks.size() == block_count(params));
    u64 expected = 0;
    for (u64 p = 2; p <= params.p_bound; ++p) expected += p;
    CHECK(block_count(params) == expected);
}

TEST_CASE("coverage: literal exhaustive oracle on a small family") {
    FamilyParams params = family_params(6, 2, 2);
    // every 2-subset and every target map has an agreeing member
    u64 size = family_size(params);
    std::vector<std::vector<u32>> members;
    for (u64 i = 0; i < size; ++i) members.push_back(get_coloring(params, i).values);
    for (u32 s1 = 1; s1 <= 6; ++s1)
        for (u32 s2 = s1 + 1; s2 <= 6; ++s2)
            for (u32 c1 = 1; c1 <= 2; ++c1)
                for (u32 c2 = 1; c2 <= 2; ++c2) {
                    bool agreed = false;
                    for (const auto& member : members)
                        if (member[s1 - 1] == c1 && member[s2 - 1] == c2) {
                            agreed = true;
                            break;
                        }
                    CHECK(agreed);
                }
}

TEST_CASE("verify_family") {
    CHECK(verify_family(family_params(6, 2, 2)).covered);
    CHECK(verify_family(family_params(4, 1, 3)).covered);
    CHECK(verify_family(family_params(1, 1, 1)).covered);
    CHECK_THROWS_AS(verify_family(family_params(32, 2, 2)), guard_error);
    CHECK_THROWS_AS(verify_family(family_params(20, 4, 2)), guard_error);
}

TEST_CASE("verify_family reports a real counterexample on a truncated family") {
    // p_bound forced down to 2: both members of every block hash 1 and 3 to
    // the same cell, so no member can tell them apart.
    FamilyParams params = family_params(4, 2, 2);
    params.p_bound = 2;
    CoverageReport report = verify_family(params);
    REQUIRE_FALSE(report.covered);
    REQUIRE(report.counterexample);
    const auto& [subset, target] = *report.counterexample;
    // scan the actual members: none agrees with the reported target map
    for (u64 i = 0; i < family_size(params); ++i) {
        Coloring coloring = get_coloring(params, i);
        bool agrees = true;
        for (size_t j = 0; j < subset.size(); ++j)
            if (coloring.values[subset[j] - 1] != target[j]) agrees = false;
        CHECK_FALSE(agrees);
    }
}

TEST_CASE("verify_family coverage grid") {
    for (u32 n : {4u, 6u, 8u})
        for (u32 k = 1; k <= 3 && k <= n; ++k)
            for (u32 c = 1; c <= 3; ++c) {
                CoverageReport report = verify_family(family_params(n, k, c));
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(c);
                CHECK(report.covered);
            }
}

TEST_CASE("threshold") {
    auto bits = [](const std::string& s) {
        std::vector<bool> out;
        for (char ch : s) out.push_back(ch == '1');
        return out;
    };
    CHECK(threshold(bits("1011"), 2));
    CHECK_FALSE(threshold(bits("0000"), 1));
    CHECK(threshold(bits("111"), 3));
    CHECK_THROWS_AS(threshold(bits("101"), 0), domain_error);

    // exhaustive agreement with popcount for strings up to length 10, t <= 4
    for (u32 n = 0; n <= 10; ++n) {
        for (u64 mask = 0; mask < (u64{1} << n); ++mask) {
            std::vector<bool> b;
            u32 ones = 0;
            for (u32 i = 0; i < n; ++i) {
                bool bitset = (mask >> i) & 1;
                b.push_back(bitset);
                if (bitset) ++ones;
            }
            for (u32 t = 1; t <= 4; ++t) {
                CAPTURE(n);
                CAPTURE(mask);
                CAPTURE(t);
                CHECK(threshold(b, t) == (ones >= t));
            }
        }
    }
}
