#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace skolem {

using BigInt = boost::multiprecision::cpp_int;

/// base^exp for exp >= 0.
BigInt pow_int(const BigInt& base, unsigned long exp);

/// Representative of a mod m in [0, m). Requires m > 0.
BigInt mod_floor(const BigInt& a, const BigInt& m);

/// Inverse of a modulo m (m > 1). Throws NotAUnit if gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

/// Exponent of the largest power of p dividing n, capped at `cap`.
/// Returns `cap` for n = 0.
int valuation_int(BigInt n, long p, int cap);

bool is_prime(long n);

std::string to_decimal(const BigInt& n);

}  // namespace skolem
