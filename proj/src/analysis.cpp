#include "skolem/analysis.hpp"

#include <cmath>

namespace skolem {
namespace {

int floor_log(long p, long n) {
    int e = 0;
    long pw = 1;
    while (pw <= n / p) {
        pw *= p;
        ++e;
    }
    return e;
}

// g(t1, h(t1)) by Horner in t2, tolerating a nonzero constant term of h
// (the coefficients of h are p-adic integers, so omitted terms of g keep
// their valuation bound under the substitution).
TruncSeries<PadicInt> substitute_horner(const TruncSeries<PadicInt>& g,
                                        const TruncSeries<PadicInt>& h) {
    const int cap = std::min(g.degree_cap(), h.degree_cap());
    int maxj = 0;
    for (const auto& [m, c] : g.terms()) maxj = std::max(maxj, m.j);
    TruncSeries<PadicInt> acc(1, cap, g.prec(), g.zero_coeff());
    TruncSeries<PadicInt> h1(1, cap, h.prec(), h.zero_coeff());
    for (const auto& [m, c] : h.terms())
        if (m.i <= cap) h1.set_coeff(m.i, 0, c);
    for (int j = maxj; j >= 0; --j) {
        TruncSeries<PadicInt> layer(1, cap, g.prec(), g.zero_coeff());
        for (const auto& [m, c] : g.terms())
            if (m.j == j && m.i <= cap) layer.set_coeff(m.i, 0, c);
        acc = j == maxj ? layer : acc * h1 + layer;
    }
    return acc;
}

}  // namespace

AlgebraElement padic_log(const AlgebraElement& u) {
    const auto& ctx = u.alg()->ctx();
    const int qv = ctx->q_valuation();
    const AlgebraElement x = u - AlgebraElement::one(u.alg());
    if (x.module_valuation_floor() < qv)
        throw NotPrincipalUnit("argument is not 1 mod qR");
    if (x.is_zero_at_precision()) return AlgebraElement::zero(u.alg());
    const int c = x.module_valuation_floor();
    const int N = ctx->prec;
    // smallest M with (M+1)c - floor(log_p(M+1)) >= N; the bound is
    // nondecreasing in the term index, so all omitted terms are certified
    long M = 1;
    while (static_cast<long>(M + 1) * c - floor_log(ctx->p, M + 1) < N) ++M;
    AlgebraElement pw = x;
    AlgebraElement acc = pw;  // n = 1 term
    for (long n = 2; n <= M; ++n) {
        pw = pw * x;
        AlgebraElement term = pw.exact_div(n);
        acc = (n % 2 == 0) ? acc - term : acc + term;
    }
    return acc;
}

AlgebraElement padic_exp(const AlgebraElement& x) {
    const auto& ctx = x.alg()->ctx();
    const int qv = ctx->q_valuation();
    if (x.module_valuation_floor() < qv)
        throw ArgumentNotInQR("argument is not in qR");
    const int N = ctx->prec;
    const int c = std::max(x.module_valuation_floor(), qv);
    AlgebraElement acc = AlgebraElement::one(x.alg());
    AlgebraElement term = acc;
    for (long n = 1;; ++n) {
        // v_p(x^n / n!) >= n c - (n-1)/(p-1), nondecreasing in n
        if (static_cast<long>(n) * c - (n - 1) / (ctx->p - 1) >= N) break;
        term = (term * x).exact_div(n);
        acc = acc + term;
    }
    return acc;
}

TruncSeries<AlgebraElement> exp_of_linear_form(
    const std::vector<AlgebraElement>& logs, int degree_cap) {
    if (logs.empty() || logs.size() > 2)
        throw DomainMismatch("exp_of_linear_form supports 1 or 2 variables");
    const auto& alg = logs.front().alg();
    const auto& ctx = alg->ctx();
    const int qv = ctx->q_valuation();
    int vmin = ctx->prec;
    for (const auto& L : logs) {
        if (L.module_valuation_floor() < qv)
            throw ArgumentNotInQR("logarithm not in qR");
        vmin = std::min(vmin, L.module_valuation_floor());
    }
    const int N = ctx->prec;
    int D = degree_cap;
    if (D <= 0) {
        D = 1;
        while ((D + 1) * vmin - D / (ctx->p - 1) < N) ++D;
    }
    const int nvars = static_cast<int>(logs.size());
    const AlgebraElement zero = AlgebraElement::zero(alg);
    TruncSeries<AlgebraElement> lin(nvars, D, N, zero);
    lin.set_coeff(1, 0, logs[0]);
    if (nvars == 2) lin.set_coeff(0, 1, logs[1]);
    TruncSeries<AlgebraElement> acc(nvars, D, N, zero);
    acc.set_coeff(0, 0, AlgebraElement::one(alg));
    TruncSeries<AlgebraElement> term = acc;
    for (long n = 1; n <= D; ++n)
        term = (term * lin).exact_div(n), acc = acc + term;
    return acc;
}

StrassmannResult strassmann_bound(const std::vector<PadicInt>& coeffs,
                                  int tail_prec) {
    if (coeffs.empty()) throw ZeroSeries("no coefficients");
    const auto& ctx = coeffs.front().ctx();
    if (tail_prec < 1 || tail_prec > ctx->prec)
        throw InsufficientPrecision("tail bound outside the working precision");
    std::vector<int> vals;
    for (const auto& a : coeffs) {
        if (a.known_prec() < tail_prec)
            throw InsufficientPrecision(
                "coefficient known precision below the tail bound");
        vals.push_back(valuation_int(a.residue(), ctx->p, tail_prec));
    }
    int r = tail_prec;
    for (int v : vals) r = std::min(r, v);
    if (r >= tail_prec) {
        bool all_zero = true;
        for (const auto& a : coeffs) all_zero = all_zero && a.is_zero_at_precision();
        if (all_zero) throw ZeroSeries("series vanishes at precision");
        throw InsufficientPrecision(
            "minimal coefficient valuation not below the tail bound");
    }
    StrassmannResult out;
    out.r = r;
    out.tail_prec = tail_prec;
    for (size_t i = 0; i < vals.size(); ++i)
        if (vals[i] == r) out.n_index = static_cast<int>(i);
    out.bound = out.n_index;
    return out;
}

SkolemResult skolem_criterion(const std::vector<TruncSeries<PadicInt>>& system) {
    const int n = static_cast<int>(system.size());
    if (n < 1 || n > 2) throw DomainMismatch("system must have 1 or 2 equations");
    const long p = detail::context_of(system.front().zero_coeff()).p;
    SkolemResult out;
    for (const auto& f : system) {
        if (f.nvars() != n) throw DomainMismatch("equation/variable count mismatch");
        if (f.prec() < 1)
            throw InsufficientPrecision("series not certified modulo p");
        std::vector<long> row(n, 0);
        for (const auto& [m, c] : f.terms()) {
            const long cm = static_cast<long>(
                mod_floor(c.residue(), p).convert_to<long>());
            if (cm == 0) continue;
            if (m.total() == 0)
                throw NotLinearModP("nonzero mod-p constant term");
            if (m.total() >= 2)
                throw NotLinearModP("mod-p monomial of degree >= 2");
            row[m.i == 1 ? 0 : 1] = cm;
        }
        out.jacobian_mod_p.push_back(std::move(row));
    }
    const auto& J = out.jacobian_mod_p;
    long det = n == 1 ? J[0][0] : J[0][0] * J[1][1] - J[0][1] * J[1][0];
    out.det_mod_p = ((det % p) + p) % p;
    out.unique = out.det_mod_p != 0;
    return out;
}

TruncSeries<PadicInt> weierstrass_solve(const TruncSeries<PadicInt>& g,
                                        SolveVar solve_for) {
    if (g.nvars() != 2) throw DomainMismatch("weierstrass_solve is bivariate");
    const auto& ctx = g.zero_coeff().ctx();
    TruncSeries<PadicInt> gs(2, g.degree_cap(), g.prec(), g.zero_coeff());
    for (const auto& [m, c] : g.terms()) {
        if (solve_for == SolveVar::T2)
            gs.set_coeff(m.i, m.j, c);
        else
            gs.set_coeff(m.j, m.i, c);  // swap roles so we always solve for t2
    }
    // scale out the content
    const int content = gs.stored_min_val();
    if (content >= gs.prec())
        throw InsufficientPrecision("series vanishes at precision");
    if (content > 0)
        gs = gs.exact_div(pow_int(ctx->p, static_cast<unsigned long>(content)));
    const PadicInt u = gs.coeff(0, 1);
    if (u.valuation_floor() != 0)
        throw NotGeneralOfOrderOne("linear coefficient is not a unit");
    if (mod_floor(gs.coeff(0, 0).residue(), ctx->p) != 0)
        throw NotGeneralOfOrderOne("constant term does not vanish mod p");
    const PadicInt uinv = u.invert();
    TruncSeries<PadicInt> h(1, gs.degree_cap(), gs.prec(), gs.zero_coeff());
    int last_resid_val = -1;
    for (int iter = 0; iter < 16 * (gs.prec() + 2); ++iter) {
        TruncSeries<PadicInt> resid = substitute_horner(gs, h);
        if (resid.is_zero_at_precision()) {
            // h is unique at the precision where the residual vanishes
            return h;
        }
        const int rv = resid.stored_min_val();
        if (rv <= last_resid_val)
            throw NotGeneralOfOrderOne("fixed-point iteration is not contracting");
        last_resid_val = rv;
        h = h - resid.scalar_mul(uinv);
    }
    throw NotGeneralOfOrderOne("fixed-point iteration did not converge");
}

}  // namespace skolem
