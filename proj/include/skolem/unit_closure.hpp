#pragma once

#include <vector>

#include "skolem/analysis.hpp"

namespace skolem {

/// Units eps_i of R together with exponents E_i (eps_i^{E_i} = 1 mod qR)
/// and logarithms L_i = log(eps_i^{E_i}) in qR. The branch series built
/// from these cover the p-adic closure of the group they generate.
struct UnitSystem {
    AlgPtr alg;
    std::vector<AlgebraElement> units;
    std::vector<long> exponents;
    std::vector<AlgebraElement> logs;

    int k() const { return static_cast<int>(units.size()); }
};

/// One branch of the closure: residues i_j in [0, E_j), the prefactor
/// prod eps_j^{i_j}, and the series prefactor * exp(sum t_j L_j).
struct ClosureBranch {
    std::vector<long> residues;
    AlgebraElement prefactor;
    TruncSeries<AlgebraElement> series;
};

/// Smallest E >= 1 with eps^E = 1 mod qR (doubled when p = 2 if needed),
/// searched directly in R/qR. Throws NotAUnit / ExponentSearchExceeded.
long unit_exponent(const AlgebraElement& eps);

/// Exponents and logs for a set of units; each L_i is verified in qR.
UnitSystem build_unit_system(const std::vector<AlgebraElement>& units);

struct RankResult {
    int rank = 0;
    std::vector<int> pivot_valuations;
};

/// Z_p-rank of the coefficient matrix of the logs by valuation-pivoted
/// elimination; a lower bound certified at the working precision.
RankResult log_independence_rank(const std::vector<AlgebraElement>& logs);

int log_independence_rank_value(const std::vector<AlgebraElement>& logs);

/// The branch for a residue tuple, with a spot-check that evaluation at
/// an integer point reproduces the direct power product.
ClosureBranch closure_branch(const UnitSystem& sys,
                             const std::vector<long>& residues,
                             int degree_cap = 0);

/// Direct power product prod eps_j^{e_j} in R, the evaluation oracle for
/// branch series.
AlgebraElement power_product(const UnitSystem& sys,
                             const std::vector<long>& exponents);

}  // namespace skolem
