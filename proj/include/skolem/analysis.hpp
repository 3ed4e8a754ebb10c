#pragma once

#include <array>
#include <vector>

#include "skolem/algebra.hpp"
#include "skolem/series.hpp"

namespace skolem {

/// Outcome of Strassmann's bound on a series over Z_p: at most `bound`
/// roots in Z_p, where bound is the largest index attaining the minimal
/// coefficient valuation r. Only certified when r < tail_prec.
struct StrassmannResult {
    int r = 0;          // minimal coefficient valuation
    int n_index = 0;    // maximal index attaining r
    int bound = 0;      // = n_index
    int tail_prec = 0;  // valuation floor asserted for unstored coefficients
};

/// Outcome of Skolem's uniqueness criterion for an n x n system with
/// vanishing constant terms and linear parts mod p.
struct SkolemResult {
    std::vector<std::vector<long>> jacobian_mod_p;
    long det_mod_p = 0;
    bool unique = false;
};

/// log(u) for u = 1 mod qR, summed with enough terms that every omitted
/// term has module valuation >= N. Throws NotPrincipalUnit.
AlgebraElement padic_log(const AlgebraElement& u);

/// exp(x) for x in qR; the result is = 1 mod qR. Throws ArgumentNotInQR.
AlgebraElement padic_exp(const AlgebraElement& x);

/// Truncated exp(t1 L1 + ... + tk Lk) over R, k <= 2. The degree cap is
/// the smallest D whose first omitted term is certified below the target
/// precision; pass degree_cap = 0 to use that rule.
TruncSeries<AlgebraElement> exp_of_linear_form(
    const std::vector<AlgebraElement>& logs, int degree_cap = 0);

/// Strassmann's theorem on the coefficient sequence a_0, a_1, ... of a
/// series whose unstored coefficients all have valuation >= tail_prec
/// (certified by the caller).
StrassmannResult strassmann_bound(const std::vector<PadicInt>& coeffs,
                                  int tail_prec);

/// Skolem's criterion for a system of n series in n variables (n <= 2):
/// unique solution in Z_p^n when the mod-p parts are linear with unit
/// Jacobian determinant. Throws NotLinearModP when inapplicable.
SkolemResult skolem_criterion(const std::vector<TruncSeries<PadicInt>>& system);

enum class SolveVar { T1, T2 };

/// One-variable Weierstrass preparation for a bivariate series general of
/// order 1 in the solved variable: returns h with g(...) = 0 <=> var = h.
/// The content (gcd power of p) is scaled out first; after that the
/// coefficient of the solved variable must be a unit and the constant term
/// must vanish mod p.
TruncSeries<PadicInt> weierstrass_solve(const TruncSeries<PadicInt>& g,
                                        SolveVar solve_for);

}  // namespace skolem
