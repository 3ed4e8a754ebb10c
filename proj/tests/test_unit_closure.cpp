#include <doctest.h>

#include <random>

#include "skolem/quintic.hpp"
#include "skolem/unit_closure.hpp"

using namespace skolem;

namespace {

const QuinticInstance& inst5() {
    static const QuinticInstance inst = build_instance(5);
    return inst;
}

}  // namespace

TEST_CASE("unit exponents") {
    const auto& inst = inst5();
    CHECK(unit_exponent(AlgebraElement::one(inst.alg)) == 1);
    CHECK(unit_exponent(inst.xi1) == 5);
    CHECK(unit_exponent(inst.xi2) == 5);
    // minimality: no smaller positive exponent works
    for (long e = 1; e < 5; ++e) {
        CHECK_FALSE(inst.xi1.pow(e)
                        .congruent_mod(AlgebraElement::one(inst.alg), 1));
    }
    CHECK_THROWS_AS(
        unit_exponent(AlgebraElement::generator(inst.alg) *
                      PadicInt(inst.alg->ctx(), 5)),
        NotAUnit);
}

TEST_CASE("unit system for the quintic pair") {
    const auto& inst = inst5();
    const auto sys = build_unit_system({inst.xi1, inst.xi2});
    REQUIRE(sys.exponents == std::vector<long>{5, 5});

    // L1 = -4b^4 theta - 8b^8 theta^2 mod 5^12
    const BigInt b = 5;
    const auto expect = AlgebraElement::from_integers(
        inst.alg, {0, -4 * pow_int(b, 4), -8 * pow_int(b, 8), 0, 0});
    CHECK(sys.logs[0].congruent_mod(expect, 12));

    // both logs live in 5R
    CHECK(sys.logs[0].module_valuation_floor() >= 1);
    CHECK(sys.logs[1].module_valuation_floor() >= 1);
}

TEST_CASE("trivial unit system") {
    const auto& inst = inst5();
    const auto sys = build_unit_system({AlgebraElement::one(inst.alg)});
    CHECK(sys.exponents == std::vector<long>{1});
    CHECK(sys.logs[0].is_zero_at_precision());
}

TEST_CASE("theta-coordinate valuation of L1 scales with v_5(b)") {
    const QuinticInstance inst = build_instance(25);
    const auto sys = build_unit_system({inst.xi1});
    CHECK(sys.exponents == std::vector<long>{5});
    CHECK(sys.logs[0].coeff(1).valuation() == 8);  // v_5(-4 * 25^4) = 4k = 8
}

TEST_CASE("rank of the logarithm matrix") {
    const auto& inst = inst5();
    const auto sys = build_unit_system({inst.xi1, inst.xi2});
    CHECK(log_independence_rank_value({AlgebraElement::zero(inst.alg)}) == 0);
    const auto two = PadicInt(inst.alg->ctx(), 2);
    CHECK(log_independence_rank_value({sys.logs[0], sys.logs[0] * two}) == 1);
    const auto rk = log_independence_rank({sys.logs[0], sys.logs[1]});
    CHECK(rk.rank == 2);
    REQUIRE(rk.pivot_valuations.size() == 2);
    CHECK(rk.pivot_valuations[0] <= 4);  // pivots visible far below N
    CHECK(rk.pivot_valuations[1] <= 4);
}

TEST_CASE("closure branches") {
    const auto& inst = inst5();
    const auto sys = build_unit_system({inst.xi1, inst.xi2});

    SUBCASE("residues (0,0) start from the identity") {
        const auto br = closure_branch(sys, {0, 0});
        CHECK(br.prefactor.congruent_to(AlgebraElement::one(inst.alg)));
        CHECK(br.series.coeff(0, 0).congruent_to(AlgebraElement::one(inst.alg)));
    }
    SUBCASE("residues (1,0) carry the theta prefactor") {
        const auto br = closure_branch(sys, {1, 0});
        CHECK(br.prefactor.congruent_to(inst.xi1));
        CHECK(br.series.coeff(0, 0).congruent_to(inst.xi1));
    }
    SUBCASE("evaluation matches direct power products") {
        const auto br = closure_branch(sys, {0, 0});
        const auto ctx = inst.alg->ctx();
        const auto at_2_1 = br.series.eval({PadicInt(ctx, 2), PadicInt(ctx, 1)});
        const auto direct = power_product(sys, {10, 5});  // xi1^10 xi2^5
        const int k = std::min({br.series.prec(), at_2_1.known_prec(),
                                direct.known_prec()});
        CHECK(k >= 8);
        CHECK(at_2_1.congruent_mod(direct, k));
    }
}

TEST_CASE("closure consistency on random exponent pairs") {
    const auto& inst = inst5();
    const auto sys = build_unit_system({inst.xi1, inst.xi2});
    const auto ctx = inst.alg->ctx();
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const long e1 = static_cast<long>(rng() % 21) - 10;
        const long e2 = static_cast<long>(rng() % 21) - 10;
        const long i1 = ((e1 % 5) + 5) % 5, i2 = ((e2 % 5) + 5) % 5;
        const auto br = closure_branch(sys, {i1, i2});
        const auto val = br.series.eval(
            {PadicInt(ctx, BigInt((e1 - i1) / 5)), PadicInt(ctx, BigInt((e2 - i2) / 5))});
        const auto direct = power_product(sys, {e1, e2});
        const int k =
            std::min({br.series.prec(), val.known_prec(), direct.known_prec()});
        CHECK(k >= 8);
        CHECK(val.congruent_mod(direct, k));
    }
}

TEST_CASE("theta^4 coordinate of the f0 exponential starts at 10b") {
    // after the change of variables (t1, t2) -> (t1, t1 + t2) the expansion
    // of f_{0,4} reads 10b t1 + 10b t2 + O(5^{6k+1})
    const auto& inst = inst5();
    const auto sys = build_unit_system({inst.xi1, inst.xi2});
    const auto g = exp_of_linear_form({sys.logs[0] + sys.logs[1], sys.logs[1]});
    const auto comps = coefficient_vector(g);
    const BigInt tenb = 10 * inst.b;
    CHECK(comps[4].coeff(1, 0).residue_mod(7) == mod_floor(tenb, pow_int(5, 7)));
    CHECK(comps[4].coeff(0, 1).residue_mod(7) == mod_floor(tenb, pow_int(5, 7)));
}
