#include "skolem/oracle.hpp"

#include <algorithm>

#include "skolem/errors.hpp"
#include <thread>

namespace skolem {
namespace {

// For fixed n, m -> m^5 + c m with c = 4 b^4 n^4 >= 0 is strictly
// increasing, so the unique candidate m in [-bound, bound] is found by
// binary search on the exact integer values.
void scan_range(const BigInt& b, long long bound, long long n_lo,
                long long n_hi, std::vector<std::pair<BigInt, BigInt>>& out) {
    const BigInt c0 = 4 * pow_int(b, 4);
    for (long long n = n_lo; n <= n_hi; ++n) {
        const BigInt n_big = n;
        const BigInt c = c0 * pow_int(n_big, 4);
        const BigInt target = 1 + pow_int(n_big, 5);
        long long lo = -bound, hi = bound;
        while (lo <= hi) {
            const long long mid = lo + (hi - lo) / 2;
            const BigInt m_big = mid;
            const BigInt value = pow_int(m_big, 5) + c * m_big;
            if (value == target) {
                out.emplace_back(m_big, n_big);
                break;
            }
            if (value < target)
                lo = mid + 1;
            else
                hi = mid - 1;
        }
    }
}

}  // namespace

SearchResult brute_force(const BigInt& b, long long bound) {
    if (bound < 1) throw Error("search bound must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    const long long total = 2 * bound + 1;
    workers = static_cast<unsigned>(
        std::min<long long>(workers, std::max<long long>(1, total / 64)));
    std::vector<std::vector<std::pair<BigInt, BigInt>>> chunks(workers);
    std::vector<std::thread> threads;
    const long long step = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const long long lo = -bound + static_cast<long long>(w) * step;
        const long long hi = std::min(bound, lo + step - 1);
        if (lo > bound) break;
        threads.emplace_back(
            [&, lo, hi, w] { scan_range(b, bound, lo, hi, chunks[w]); });
    }
    for (auto& t : threads) t.join();

    SearchResult result;
    result.b = b;
    result.bound = bound;
    for (auto& chunk : chunks)
        for (auto& mn : chunk) result.solutions.push_back(std::move(mn));
    std::sort(result.solutions.begin(), result.solutions.end());
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

}  // namespace skolem
