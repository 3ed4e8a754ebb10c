#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "skolem/padic.hpp"

namespace skolem {

/// R = Z_p[theta]/(f) for a monic integer polynomial f of degree r, a free
/// Z_p-module of rank r with basis 1, theta, ..., theta^(r-1).
class Algebra {
public:
    /// modulus: coefficient sequence low to high, size r+1, leading = 1.
    static std::shared_ptr<const Algebra> make(CtxPtr ctx,
                                               std::vector<BigInt> modulus);

    int rank() const { return rank_; }
    const CtxPtr& ctx() const { return ctx_; }
    /// Integer lifts of the modulus coefficients, low to high.
    const std::vector<BigInt>& modulus_int() const { return modulus_int_; }

    bool same(const Algebra& other) const;

private:
    Algebra() = default;
    CtxPtr ctx_;
    int rank_ = 0;
    std::vector<BigInt> modulus_int_;
};

using AlgPtr = std::shared_ptr<const Algebra>;

class AlgebraElement {
public:
    AlgebraElement(AlgPtr alg, std::vector<PadicInt> coeffs);
    static AlgebraElement from_integers(const AlgPtr& alg,
                                        const std::vector<BigInt>& coeffs);
    static AlgebraElement zero(const AlgPtr& alg);
    static AlgebraElement one(const AlgPtr& alg);
    /// The class of theta.
    static AlgebraElement generator(const AlgPtr& alg);

    const AlgPtr& alg() const { return alg_; }
    const std::vector<PadicInt>& coeffs() const { return coeffs_; }
    const PadicInt& coeff(int j) const { return coeffs_[j]; }

    AlgebraElement operator+(const AlgebraElement& rhs) const;
    AlgebraElement operator-(const AlgebraElement& rhs) const;
    AlgebraElement operator*(const AlgebraElement& rhs) const;
    AlgebraElement operator*(const PadicInt& scalar) const;
    AlgebraElement operator-() const;

    /// Largest k with x in p^k R: the minimum of the coordinate valuations.
    /// Empty means ">= known precision".
    std::optional<int> module_valuation() const;
    int module_valuation_floor() const;
    bool is_zero_at_precision() const;

    /// Unit test in R/pR: the reduction mod p must be coprime to the
    /// modulus over F_p (R/pR may be non-reduced, so gcd is the criterion).
    bool is_unit_mod_p() const;

    /// Inverse at precision N by Newton iteration x <- x(2 - ax) from an
    /// inverse in R/pR. Throws NotAUnit.
    AlgebraElement invert() const;

    AlgebraElement pow(long e) const;

    /// Resultant of the modulus and the representative polynomial, modulo
    /// p^N; equals the determinant of multiplication-by-x.
    PadicInt norm() const;

    AlgebraElement divided_by_p_pow(int v) const;
    AlgebraElement exact_div(const BigInt& d) const;

    /// Minimum known precision over the coordinates.
    int known_prec() const;
    bool congruent_to(const AlgebraElement& rhs) const;
    /// Coordinate-wise congruence modulo p^k (requires k <= known_prec).
    bool congruent_mod(const AlgebraElement& rhs, int k) const;

private:
    AlgPtr alg_;
    std::vector<PadicInt> coeffs_;

    void check_same_alg(const AlgebraElement& rhs) const;
};

/// Exact integer resultant of two integer polynomials (low-to-high
/// coefficients), via fraction-free Gaussian elimination on the Sylvester
/// matrix. Used to certify unit-ness (norm = ±1) without truncation.
BigInt resultant_int(const std::vector<BigInt>& f, const std::vector<BigInt>& g);

}  // namespace skolem
