#include <doctest.h>

#include "ccg/parallel.hpp"

using namespace ccg;

TEST_CASE("counted first success: serial and parallel agree") {
    auto eval = [](u64 i) -> std::pair<std::optional<u64>, u64> {
        // hits at 137 and 400; weights vary by index
        if (i == 137 || i == 400) return {i * 10, i % 3 + 1};
        return {std::nullopt, i % 3 + 1};
    };
    auto serial = first_success_counted_serial(1000, eval);
    REQUIRE(serial.hit);
    CHECK(serial.hit->first == 137);
    CHECK(serial.hit->second == 1370);
    for (int threads : {1, 2, 3, 8}) {
        auto parallel = first_success_counted(1000, threads, eval);
        REQUIRE(parallel.hit);
        CHECK(parallel.hit->first == serial.hit->first);
        CHECK(parallel.hit->second == serial.hit->second);
        CHECK(parallel.work == serial.work);
    }
}

TEST_CASE("counted first success: no hit sums all work") {
    auto eval = [](u64 i) -> std::pair<std::optional<int>, u64> {
        return {std::nullopt, i + 1};
    };
    auto serial = first_success_counted_serial(500, eval);
    CHECK_FALSE(serial.hit);
    CHECK(serial.work == 500 * 501 / 2);
    for (int threads : {2, 4}) {
        auto parallel = first_success_counted(500, threads, eval);
        CHECK_FALSE(parallel.hit);
        CHECK(parallel.work == serial.work);
    }
}

TEST_CASE("counted first success: hit in the first chunk") {
    auto eval = [](u64 i) -> std::pair<std::optional<int>, u64> {
        if (i == 0) return {42, 7};
        return {std::nullopt, 1};
    };
    for (int threads : {1, 2, 8}) {
        auto outcome = first_success_counted(100, threads, eval);
        REQUIRE(outcome.hit);
        CHECK(outcome.hit->first == 0);
        CHECK(outcome.hit->second == 42);
        CHECK(outcome.work == 7);
    }
}

TEST_CASE("empty range") {
    auto eval = [](u64) -> std::pair<std::optional<int>, u64> { return {1, 1}; };
    auto outcome = first_success_counted(0, 4, eval);
    CHECK_FALSE(outcome.hit);
    CHECK(outcome.work == 0);
}
