#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "skolem/bigint.hpp"
#include "skolem/errors.hpp"

namespace skolem {

/// A fixed working precision for Z_p arithmetic. Every value carries a
/// pointer to its context; mixing contexts is an error, not a coercion.
struct PadicContext {
    long p;          // the prime
    long q;          // 4 if p = 2, else p
    int prec;        // working precision N (exponent of p)
    BigInt modulus;  // p^N

    static std::shared_ptr<const PadicContext> make(long p, int prec);

    bool same(const PadicContext& other) const {
        return p == other.p && prec == other.prec;
    }
    /// v_p(q): 1 for odd p, 2 for p = 2.
    int q_valuation() const { return p == 2 ? 2 : 1; }
};

using CtxPtr = std::shared_ptr<const PadicContext>;

/// An element of Z_p known modulo p^known_prec, stored as a residue in
/// [0, p^N). known_prec < N happens only after exact division by a power
/// of p; comparisons are valid up to the minimum known precision.
class PadicInt {
public:
    PadicInt(CtxPtr ctx, const BigInt& value);

    static PadicInt zero(const CtxPtr& ctx) { return PadicInt(ctx, 0); }
    static PadicInt one(const CtxPtr& ctx) { return PadicInt(ctx, 1); }

    /// num/den embedded into Z_p. Requires den != 0 and gcd(den, p) = 1.
    static PadicInt from_rational(const BigInt& num, const BigInt& den,
                                  const CtxPtr& ctx);

    const CtxPtr& ctx() const { return ctx_; }
    const BigInt& residue() const { return residue_; }
    int known_prec() const { return known_; }

    /// Largest v with p^v | residue, capped at known_prec. An empty result
    /// means "#>= known_prec": finite precision cannot certify exact zero.
    std::optional<int> valuation() const;
    /// min(v_p(residue), known_prec).
    int valuation_floor() const;
    /// True iff the residue vanishes at the known precision.
    bool is_zero_at_precision() const;
    bool is_unit() const { return valuation_floor() == 0; }

    PadicInt operator+(const PadicInt& rhs) const;
    PadicInt operator-(const PadicInt& rhs) const;
    PadicInt operator*(const PadicInt& rhs) const;
    PadicInt operator-() const;

    /// Inverse modulo p^N. Throws NotAUnit unless valuation = 0.
    PadicInt invert() const;

    /// Integer power; negative exponents go through invert().
    PadicInt pow(long e) const;

    /// Exact division by p^v. Requires valuation >= v; the result is known
    /// only modulo p^(known_prec - v).
    PadicInt divided_by_p_pow(int v) const;

    /// Exact division by d = ±p^e * m with gcd(m, p) = 1: strips p^e
    /// exactly (precision loss e) and multiplies by the inverse of ±m.
    PadicInt exact_div(const BigInt& d) const;

    /// Residue modulo p^k. Requires k <= known_prec.
    BigInt residue_mod(int k) const;

    /// Equality at the minimum of the two known precisions.
    bool congruent_to(const PadicInt& rhs) const;

    PadicInt with_known_prec(int k) const;

private:
    CtxPtr ctx_;
    BigInt residue_;
    int known_;

    void check_same_ctx(const PadicInt& rhs) const;
};

}  // namespace skolem
