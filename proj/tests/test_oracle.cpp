#include <doctest.h>

#include <algorithm>

#include "skolem/oracle.hpp"
#include "skolem/quintic.hpp"

using namespace skolem;

namespace {
using Pair = std::pair<BigInt, BigInt>;
}

TEST_CASE("tiny boxes") {
    for (const long b : {5L, -5L, 10L, 7L}) {
        const auto res = brute_force(b, 1);
        CHECK(res.solutions == std::vector<Pair>{{0, -1}, {1, 0}});
    }
}

TEST_CASE("the third solution appears once the box is wide enough") {
    const auto small = brute_force(5, 100);
    CHECK(small.solutions == std::vector<Pair>{{0, -1}, {1, 0}});
    const auto big = brute_force(5, 3000);
    CHECK(big.solutions == std::vector<Pair>{{0, -1}, {1, 0}, {1, 2500}});
}

TEST_CASE("every reported pair satisfies the equation exactly") {
    const auto res = brute_force(5, 3000);
    for (const auto& [m, n] : res.solutions) CHECK(thue_form(5, m, n) == 1);
}

TEST_CASE("monotonicity in the bound") {
    const auto a = brute_force(10, 50);
    const auto b = brute_force(10, 500);
    for (const auto& s : a.solutions)
        CHECK(std::find(b.solutions.begin(), b.solutions.end(), s) !=
              b.solutions.end());
}

TEST_CASE("bad bound is rejected") {
    CHECK_THROWS_AS(brute_force(5, 0), Error);
}
