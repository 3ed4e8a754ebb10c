#include <doctest.h>

#include <random>

#include "skolem/padic.hpp"

using namespace skolem;

namespace {
CtxPtr ctx52() { return PadicContext::make(5, 2); }
CtxPtr ctx54() { return PadicContext::make(5, 4); }
}  // namespace

TEST_CASE("rational embedding") {
    auto ctx = ctx52();
    CHECK(PadicInt::from_rational(1, 1, ctx).residue() == 1);
    // 3^-1 = 17 mod 25, -20*17 = -340 = 10 mod 25
    CHECK(PadicInt::from_rational(-20, 3, ctx).residue() == 10);
    CHECK_THROWS_AS(PadicInt::from_rational(1, 5, ctx), DenominatorNotUnit);
    CHECK_THROWS_AS(PadicInt::from_rational(1, 0, ctx), ZeroDenominator);
}

TEST_CASE("rational embedding is a ring homomorphism") {
    auto ctx = PadicContext::make(5, 12);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const long a = static_cast<long>(rng() % 2001) - 1000;
        const long c = static_cast<long>(rng() % 2001) - 1000;
        long b = static_cast<long>(rng() % 999) + 1;
        long d = static_cast<long>(rng() % 999) + 1;
        if (b % 5 == 0) ++b;
        if (d % 5 == 0) ++d;
        const auto lhs = PadicInt::from_rational(a, b, ctx) +
                         PadicInt::from_rational(c, d, ctx);
        const auto rhs = PadicInt::from_rational(
            BigInt(a) * d + BigInt(c) * b, BigInt(b) * d, ctx);
        CHECK(lhs.congruent_to(rhs));
        const auto prod = PadicInt::from_rational(a, b, ctx) *
                          PadicInt::from_rational(c, d, ctx);
        CHECK(prod.congruent_to(
            PadicInt::from_rational(BigInt(a) * c, BigInt(b) * d, ctx)));
    }
}

TEST_CASE("valuation") {
    auto ctx = ctx54();
    CHECK(PadicInt(ctx, 50).valuation() == 2);
    CHECK_FALSE(PadicInt(ctx, 0).valuation().has_value());  // ">= N"
    CHECK(PadicInt(ctx, 0).valuation_floor() == 4);
    CHECK(PadicInt(ctx, 3).valuation() == 0);
    CHECK(PadicInt(ctx, 3).is_unit());
}

TEST_CASE("inversion") {
    CHECK(PadicInt(ctx52(), 3).invert().residue() == 17);
    CHECK(PadicInt(ctx52(), 1).invert().residue() == 1);
    CHECK_THROWS_AS(PadicInt(ctx52(), 10).invert(), NotAUnit);
}

TEST_CASE("inversion is an involution on units") {
    auto ctx = PadicContext::make(5, 10);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        BigInt r = BigInt(rng() % 9765625);
        if (r % 5 == 0) r += 1;
        const PadicInt x(ctx, r);
        CHECK(x.invert().invert().residue() == x.residue());
        CHECK((x * x.invert()).residue() == 1);
    }
}

TEST_CASE("valuation of a product is additive below the cap") {
    auto ctx = PadicContext::make(5, 8);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int va = static_cast<int>(rng() % 4);
        const int vb = static_cast<int>(rng() % 4);
        BigInt ua = BigInt(rng() % 100) * 5 + 1 + rng() % 4;
        BigInt ub = BigInt(rng() % 100) * 5 + 1 + rng() % 4;
        if (ua % 5 == 0) ua += 1;
        if (ub % 5 == 0) ub += 1;
        const PadicInt a(ctx, ua * pow_int(5, va));
        const PadicInt b(ctx, ub * pow_int(5, vb));
        CHECK((a * b).valuation() == va + vb);
    }
}

TEST_CASE("division by powers of p tracks precision loss") {
    auto ctx = ctx54();
    const PadicInt x(ctx, 50);
    const PadicInt y = x.divided_by_p_pow(2);
    CHECK(y.residue_mod(2) == 2);
    CHECK(y.known_prec() == 2);
    CHECK_THROWS_AS(x.divided_by_p_pow(3), InsufficientPrecision);
    CHECK_THROWS_AS(y.residue_mod(3), InsufficientPrecision);

    // exact_div strips the p-part and inverts the unit part
    const PadicInt z(ctx, 150);  // 150 = 25 * 6
    const PadicInt w = z.exact_div(75);  // 75 = 25 * 3
    CHECK(w.known_prec() == 2);
    CHECK(w.residue_mod(2) == 2);  // 6/3
    const PadicInt neg = z.exact_div(-75);
    CHECK(neg.residue_mod(2) == 23);  // -2 mod 25
}

TEST_CASE("congruence respects known precision") {
    auto ctx = ctx54();
    const PadicInt a(ctx, 50);
    const PadicInt b(ctx, 50 + 125);
    CHECK_FALSE(a.congruent_to(b));
    // after dividing by 25 both are known mod 25 only; 2 vs 7 differ
    CHECK_FALSE(a.divided_by_p_pow(2).congruent_to(b.divided_by_p_pow(2)));
    CHECK(a.congruent_to(a.with_known_prec(2)));
    CHECK(PadicInt(ctx, 2).with_known_prec(2)
              .congruent_to(PadicInt(ctx, 2 + 25).with_known_prec(2)));
}

TEST_CASE("contexts never mix silently") {
    const PadicInt a(ctx52(), 1);
    const PadicInt b(ctx54(), 1);
    CHECK_THROWS_AS(a + b, ContextMismatch);
    CHECK_THROWS_AS(a * b, ContextMismatch);
}

TEST_CASE("pow handles negative exponents through inversion") {
    auto ctx = ctx54();
    const PadicInt x(ctx, 3);
    CHECK((x.pow(3) * x.pow(-3)).residue() == 1);
    CHECK(x.pow(0).residue() == 1);
    CHECK_THROWS_AS(PadicInt(ctx, 5).pow(-1), NotAUnit);
}
