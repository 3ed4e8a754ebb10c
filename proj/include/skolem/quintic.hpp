#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skolem/unit_closure.hpp"

namespace skolem {

/// The 5-adic setup for m^5 + 4b^4 m n^4 - n^5 = 1 with 5 | b:
/// K = Q[x]/(x^5 + 4b^4 x - 1), fundamental positive units xi1 = theta and
/// xi2 = theta^2 + 2b theta + 2b^2 (taken as input facts, norm-certified).
struct QuinticInstance {
    BigInt b;
    int k = 0;        // v_5(b)
    int prec = 0;     // working precision N
    AlgPtr alg;       // Z_5[theta]/(theta^5 + 4b^4 theta - 1)
    AlgebraElement xi1;
    AlgebraElement xi2;
};

struct CaseWitness {
    long n1_mod5 = 0, n2_mod5 = 0;  // excluded residue pair
    long n1 = 0, n2 = 0;            // witness exponents
    int coordinate = 0;             // theta-power with nonzero coefficient
};

/// Reduction of the 25 residue pairs (n1 mod 5, n2 mod 5) to the two
/// survivors {(0,0), (1,0)}. Exclusions are evidenced by sampled direct
/// products over [-B, B]^2; the universal claim rests on the binomial
/// congruence argument, which the report marks as such.
struct CaseReductionReport {
    std::vector<std::pair<long, long>> surviving;
    long sampled_range = 0;
    long pairs_checked = 0;
    std::vector<CaseWitness> evidence;  // one witness per excluded pair
    bool binomial_congruence_verified = false;
};

/// The f1 = xi1 * exp(t1 L1 + t2 L2) branch: Skolem's criterion applied to
/// the scaled theta^2 and theta^3 coordinate series.
struct SkolemCertificate {
    TruncSeries<PadicInt> f12_scaled;  // b^-4 * f_{1,2}
    TruncSeries<PadicInt> f13_scaled;  // (5 b^3)^-1 * f_{1,3}
    SkolemResult skolem;
    std::pair<long, long> root{0, 0};
    std::pair<BigInt, BigInt> solution;  // (m, n) = (0, -1)
};

/// The f0 branch: change of variables, Weierstrass solve on the theta^4
/// coordinate, then Strassmann on the theta^2 coordinate.
struct StrassmannCertificate {
    TruncSeries<PadicInt> f04;
    TruncSeries<PadicInt> h;
    TruncSeries<PadicInt> f02;
    StrassmannResult strassmann;
    std::vector<long> roots;                          // {0, 1}
    std::vector<std::pair<BigInt, BigInt>> solutions; // (1,0), (1,4b^4)
};

struct TheoremCertificate {
    BigInt b;
    int k = 0;
    int prec = 0;
    CaseReductionReport case_reduction;
    SkolemCertificate skolem_branch;
    StrassmannCertificate strassmann_branch;
    std::vector<std::pair<BigInt, BigInt>> solutions;
    std::vector<std::string> external_dependencies;
    std::optional<std::string> oracle_summary;

    nlohmann::json to_json() const;
};

/// Build the instance; default precision 14k+4. Certifies exact integer
/// norms of xi1, xi2 and that x^5 + 4b^4 x - 1 has no rational root.
QuinticInstance build_instance(const BigInt& b, std::optional<int> prec = {});

CaseReductionReport case_reduction(const QuinticInstance& inst, long B = 25);

SkolemCertificate branch_f1(const QuinticInstance& inst);

StrassmannCertificate branch_f0(const QuinticInstance& inst);

/// Residues (m, n) = (coeff of 1, negated coeff of theta) of an element
/// whose higher coordinates vanish at `check_prec` digits. Throws NotInX.
std::pair<BigInt, BigInt> extract_solution(const AlgebraElement& x,
                                           int check_prec);

/// True iff x = m - n*theta at check_prec digits for the exact integers
/// (m, n).
bool matches_solution(const AlgebraElement& x, const BigInt& m,
                      const BigInt& n, int check_prec);

/// The full Section-3 pipeline: case reduction, both branches, and exact
/// integer re-verification of the three solutions.
TheoremCertificate verify_theorem(const BigInt& b,
                                  std::optional<int> prec = {});

/// Exact integer evaluation of m^5 + 4b^4 m n^4 - n^5.
BigInt thue_form(const BigInt& b, const BigInt& m, const BigInt& n);

}  // namespace skolem
