// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Each check is self-contained and timed where the
// criterion has a time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "skolem/analysis.hpp"
#include "skolem/oracle.hpp"
#include "skolem/quintic.hpp"

using namespace skolem;

namespace {

int failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("%s criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), note.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

bool theorem_reproduction() {
    for (const long b : {5L, -5L, 10L, 25L, 50L}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto cert = verify_theorem(b);
        if (seconds_since(t0) >= 60.0) return false;
        const BigInt n3 = 4 * pow_int(BigInt(b), 4);
        if (cert.solutions.size() != 3) return false;
        if (cert.solutions[0] != std::pair<BigInt, BigInt>{1, 0}) return false;
        if (cert.solutions[1] != std::pair<BigInt, BigInt>{0, -1}) return false;
        if (cert.solutions[2] != std::pair<BigInt, BigInt>{1, n3}) return false;
        for (const auto& [m, n] : cert.solutions)
            if (thue_form(b, m, n) != 1) return false;
    }
    return true;
}

bool oracle_agreement() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = brute_force(5, 3000);
    if (seconds_since(t0) >= 10.0) return false;
    const std::vector<std::pair<BigInt, BigInt>> expect = {
        {0, -1}, {1, 0}, {1, 2500}};
    if (res.solutions != expect) return false;
    auto cert = verify_theorem(5).solutions;
    std::sort(cert.begin(), cert.end());
    return cert == res.solutions;
}

bool l1_regression() {
    const QuinticInstance inst = build_instance(5);
    const auto L1 = padic_log(inst.xi1.pow(5));
    const BigInt b = 5;
    const auto expect = AlgebraElement::from_integers(
        inst.alg, {0, -4 * pow_int(b, 4), -8 * pow_int(b, 8), 0, 0});
    return L1.congruent_mod(expect, 12);
}

bool l2_regression() {
    const QuinticInstance inst = build_instance(5);
    const auto L2 = padic_log(inst.xi2.pow(5));
    const auto ctx = inst.alg->ctx();
    const BigInt b = 5;
    const std::vector<PadicInt> expect = {
        PadicInt(ctx, 32 * pow_int(b, 5)),
        PadicInt(ctx, 2 * pow_int(b, 4)),
        PadicInt::from_rational(-20 * pow_int(b, 3), 3, ctx) +
            PadicInt(ctx, 4 * pow_int(b, 8)),
        PadicInt::from_rational(-320 * pow_int(b, 7), 21, ctx),
        PadicInt(ctx, 10 * b)};
    for (int j = 0; j < 5; ++j)
        if (L2.coeff(j).residue_mod(9) != expect[j].residue_mod(9)) return false;
    return true;
}

bool skolem_branch() {
    for (const long b : {5L, 25L}) {
        const auto cert = branch_f1(build_instance(b));
        if (cert.f12_scaled.coeff(1, 0).residue_mod(1) != 1) return false;
        if (cert.f12_scaled.coeff(0, 1).residue_mod(1) != 2) return false;
        if (cert.f13_scaled.coeff(1, 0).residue_mod(1) != 0) return false;
        if (cert.f13_scaled.coeff(0, 1).residue_mod(1) != 2) return false;
        if (cert.skolem.det_mod_p != 2 || !cert.skolem.unique) return false;
    }
    return true;
}

bool strassmann_branch() {
    for (const long b : {5L, 25L}) {
        const QuinticInstance inst = build_instance(b);
        const int k = inst.k;
        const auto cert = branch_f0(inst);
        const BigInt b8 = 8 * pow_int(BigInt(b), 8);
        if (cert.f02.coeff(0, 0).valuation_floor() < 8 * k + 1) return false;
        if (cert.f02.coeff(1, 0).valuation() != 8 * k) return false;
        if (cert.f02.coeff(2, 0).valuation() != 8 * k) return false;
        if (cert.f02.coeff(1, 0).residue_mod(8 * k + 1) !=
            mod_floor(-b8, pow_int(5, 8 * k + 1)))
            return false;
        if (cert.f02.coeff(2, 0).residue_mod(8 * k + 1) !=
            mod_floor(b8, pow_int(5, 8 * k + 1)))
            return false;
        if (cert.strassmann.bound != 2) return false;
        if (cert.roots != std::vector<long>{0, 1}) return false;
    }
    return true;
}

bool analytic_identities() {
    auto ctx = PadicContext::make(5, 20);
    const auto scalar = Algebra::make(ctx, {0, 1});
    const auto quintic = Algebra::make(ctx, {-1, 2500, 0, 0, 0, 1});
    std::mt19937_64 rng(47);
    for (const auto& alg : {scalar, quintic}) {
        const int r = alg->rank();
        auto random_elt = [&] {
            std::vector<BigInt> c;
            for (int j = 0; j < r; ++j)
                c.push_back(BigInt(rng() % 100000000) * 5);
            return AlgebraElement::from_integers(alg, c);
        };
        const auto one = AlgebraElement::one(alg);
        for (int trial = 0; trial < 200; ++trial) {
            const auto x = random_elt();
            const auto u = one + x;
            if (!padic_exp(padic_log(u)).congruent_to(u)) return false;
        }
        for (int trial = 0; trial < 200; ++trial) {
            const auto x = random_elt();
            const auto y = random_elt();
            const auto lhs = padic_exp(x + y);
            const auto rhs = padic_exp(x) * padic_exp(y);
            if (!lhs.congruent_to(rhs)) return false;
        }
    }
    return true;
}

bool closure_consistency() {
    const QuinticInstance inst = build_instance(5);
    const auto sys = build_unit_system({inst.xi1, inst.xi2});
    const auto ctx = inst.alg->ctx();
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        const long e1 = static_cast<long>(rng() % 21) - 10;
        const long e2 = static_cast<long>(rng() % 21) - 10;
        const long i1 = ((e1 % 5) + 5) % 5, i2 = ((e2 % 5) + 5) % 5;
        const auto br = closure_branch(sys, {i1, i2});
        const auto val = br.series.eval({PadicInt(ctx, BigInt((e1 - i1) / 5)),
                                         PadicInt(ctx, BigInt((e2 - i2) / 5))});
        const auto direct = power_product(sys, {e1, e2});
        const int k = std::min(
            {br.series.prec(), val.known_prec(), direct.known_prec()});
        if (k < 8) return false;
        if (!val.congruent_mod(direct, k)) return false;
    }
    return true;
}

bool case_reduction_evidence() {
    for (const long b : {5L, 25L}) {
        const auto report = case_reduction(build_instance(b), 25);
        if (report.surviving !=
            std::vector<std::pair<long, long>>{{0, 0}, {1, 0}})
            return false;
        if (!report.binomial_congruence_verified) return false;
        if (report.pairs_checked != 51 * 51) return false;
        if (report.evidence.size() != 23) return false;
        for (const auto& w : report.evidence)
            if (w.coordinate < 2 || w.coordinate > 4) return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "theorem reproduction for b in {5,-5,10,25,50} under 60 s each",
              theorem_reproduction);
    criterion(2, "oracle agreement: brute_force(5, 3000) under 10 s",
              oracle_agreement);
    criterion(3, "L1 regression mod 5^12 for b = 5", l1_regression);
    criterion(4, "L2 regression mod 5^9 for b = 5", l2_regression);
    criterion(5, "Skolem branch linear parts and det = 2 mod 5 for b in {5,25}",
              skolem_branch);
    criterion(6, "Strassmann branch valuations, bound 2, roots {0,1} for b in {5,25}",
              strassmann_branch);
    criterion(7, "exp/log round trip and homomorphism, 200 random cases each",
              analytic_identities);
    criterion(8, "closure consistency on 50 random exponent pairs",
              closure_consistency);
    criterion(9, "case-reduction evidence over [-25,25]^2 for b in {5,25}",
              case_reduction_evidence);
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
