#include "skolem/bigint.hpp"

#include "skolem/errors.hpp"

namespace skolem {

BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    // extended Euclid on (a mod m, m)
    BigInt r0 = mod_floor(a, m), r1 = m;
    BigInt s0 = 1, s1 = 0;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw NotAUnit("element not invertible modulo m");
    return mod_floor(s0, m);
}

int valuation_int(BigInt n, long p, int cap) {
    if (n == 0) return cap;
    int v = 0;
    while (v < cap && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string to_decimal(const BigInt& n) { return n.str(); }

}  // namespace skolem
