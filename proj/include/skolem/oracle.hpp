#pragma once

#include <chrono>
#include <utility>
#include <vector>

#include "skolem/bigint.hpp"

namespace skolem {

struct SearchResult {
    BigInt b;
    long long bound = 0;
    std::vector<std::pair<BigInt, BigInt>> solutions;  // sorted
    std::chrono::duration<double> elapsed{};
};

/// Exhaustive exact search for solutions of m^5 + 4b^4 m n^4 - n^5 = 1
/// with |m|, |n| <= bound. For each n the map m -> m^5 + 4b^4 n^4 m is
/// strictly increasing, so m is found by binary search; n-ranges are
/// scanned in parallel and merged deterministically.
SearchResult brute_force(const BigInt& b, long long bound);

}  // namespace skolem
