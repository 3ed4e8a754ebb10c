#include "skolem/unit_closure.hpp"

namespace skolem {

long unit_exponent(const AlgebraElement& eps) {
    if (!eps.is_unit_mod_p()) throw NotAUnit("not a unit of R/pR");
    const auto& ctx = eps.alg()->ctx();
    const int qv = ctx->q_valuation();
    // |(R/pR)^x| divides a number below p^r, so the search is bounded
    long bound = 1;
    for (int i = 0; i < eps.alg()->rank(); ++i) {
        if (bound > 100000000L / ctx->p) break;
        bound *= ctx->p;
    }
    AlgebraElement pw = eps;
    const AlgebraElement one = AlgebraElement::one(eps.alg());
    for (long e = 1; e <= bound; ++e) {
        if ((pw - one).module_valuation_floor() >= 1) {
            if (ctx->p != 2) return e;
            if ((pw - one).module_valuation_floor() >= qv) return e;
            // p = 2: replace E by 2E
            AlgebraElement sq = pw * pw;
            if ((sq - one).module_valuation_floor() >= qv) return 2 * e;
            throw ExponentSearchExceeded("doubling did not reach 1 mod 4R");
        }
        pw = pw * eps;
    }
    throw ExponentSearchExceeded("no exponent below the group-order bound");
}

UnitSystem build_unit_system(const std::vector<AlgebraElement>& units) {
    if (units.empty()) throw DomainMismatch("empty unit list");
    UnitSystem sys;
    sys.alg = units.front().alg();
    sys.units = units;
    const int qv = sys.alg->ctx()->q_valuation();
    for (const auto& eps : units) {
        if (!eps.alg()->same(*sys.alg))
            throw AlgebraMismatch("units from different algebras");
        const long E = unit_exponent(eps);
        sys.exponents.push_back(E);
        AlgebraElement L = padic_log(eps.pow(E));
        if (L.module_valuation_floor() < qv)
            throw ArgumentNotInQR("logarithm left qR");
        sys.logs.push_back(std::move(L));
    }
    return sys;
}

RankResult log_independence_rank(const std::vector<AlgebraElement>& logs) {
    RankResult out;
    if (logs.empty()) return out;
    const auto& alg = logs.front().alg();
    const int r = alg->rank();
    const int k = static_cast<int>(logs.size());
    // rows = logs, columns = coordinates
    std::vector<std::vector<PadicInt>> M;
    for (const auto& L : logs) M.push_back(L.coeffs());
    std::vector<bool> row_done(k, false), col_done(r, false);
    for (int step = 0; step < std::min(k, r); ++step) {
        // global valuation pivoting keeps every elimination division exact
        int bi = -1, bj = -1, bv = 0;
        for (int i = 0; i < k; ++i) {
            if (row_done[i]) continue;
            for (int j = 0; j < r; ++j) {
                if (col_done[j]) continue;
                const auto& e = M[i][j];
                const int v = e.valuation_floor();
                if (v < e.known_prec() && (bi < 0 || v < bv)) {
                    bi = i;
                    bj = j;
                    bv = v;
                }
            }
        }
        if (bi < 0) break;
        out.rank += 1;
        out.pivot_valuations.push_back(bv);
        row_done[bi] = true;
        col_done[bj] = true;
        const PadicInt pivot_unit = M[bi][bj].divided_by_p_pow(bv).invert();
        for (int i = 0; i < k; ++i) {
            if (row_done[i]) continue;
            const PadicInt factor =
                M[i][bj].divided_by_p_pow(bv) * pivot_unit;
            for (int j = 0; j < r; ++j)
                M[i][j] = M[i][j] - factor * M[bi][j];
        }
    }
    return out;
}

int log_independence_rank_value(const std::vector<AlgebraElement>& logs) {
    return log_independence_rank(logs).rank;
}

AlgebraElement power_product(const UnitSystem& sys,
                             const std::vector<long>& exponents) {
    if (exponents.size() != sys.units.size())
        throw DomainMismatch("exponent tuple arity mismatch");
    AlgebraElement acc = AlgebraElement::one(sys.alg);
    for (size_t j = 0; j < exponents.size(); ++j)
        acc = acc * sys.units[j].pow(exponents[j]);
    return acc;
}

ClosureBranch closure_branch(const UnitSystem& sys,
                             const std::vector<long>& residues,
                             int degree_cap) {
    if (residues.size() != sys.units.size())
        throw ResidueOutOfRange("residue tuple arity mismatch");
    for (size_t j = 0; j < residues.size(); ++j)
        if (residues[j] < 0 || residues[j] >= sys.exponents[j])
            throw ResidueOutOfRange("residue outside [0, E_j)");
    AlgebraElement prefactor = AlgebraElement::one(sys.alg);
    for (size_t j = 0; j < residues.size(); ++j)
        prefactor = prefactor * sys.units[j].pow(residues[j]);
    TruncSeries<AlgebraElement> series =
        exp_of_linear_form(sys.logs, degree_cap).scalar_mul(prefactor);

    // spot check: evaluation at (1, 0, ...) must reproduce the direct
    // power product prod eps_j^{i_j} * eps_1^{E_1}
    {
        std::vector<PadicInt> point;
        std::vector<long> exps = residues;
        point.emplace_back(PadicInt::one(sys.alg->ctx()));
        exps[0] += sys.exponents[0];
        for (size_t j = 1; j < residues.size(); ++j)
            point.emplace_back(PadicInt::zero(sys.alg->ctx()));
        const AlgebraElement direct = power_product(sys, exps);
        const AlgebraElement via_series = series.eval(point);
        const int check = std::min({series.prec(), via_series.known_prec(),
                                    direct.known_prec()});
        if (!via_series.congruent_mod(direct, check))
            throw Error("closure branch failed its evaluation spot check");
    }
    return ClosureBranch{residues, std::move(prefactor), std::move(series)};
}

}  // namespace skolem
