#include "skolem/algebra.hpp"

#include <algorithm>

namespace skolem {
namespace {

// polynomial arithmetic over F_p, coefficients low to high, normalized
using FpPoly = std::vector<long>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, long p) {
    fp_trim(a);
    const long lead_inv =
        static_cast<long>(mod_inverse(b.back(), p).convert_to<long>());
    while (a.size() >= b.size()) {
        const long c = a.back() * lead_inv % p;
        const size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        fp_trim(a);
    }
    return a;
}

// x with x*a = 1 in F_p[t]/(f), or empty if a is not a unit there
FpPoly fp_inverse_mod(FpPoly a, FpPoly f, long p) {
    fp_trim(a);
    fp_trim(f);
    // extended Euclid: r0 = f, r1 = a; track s for a only
    FpPoly r0 = f, r1 = a;
    FpPoly s0 = {}, s1 = {1};
    auto mul = [p](const FpPoly& x, const FpPoly& y) {
        if (x.empty() || y.empty()) return FpPoly{};
        FpPoly out(x.size() + y.size() - 1, 0);
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j)
                out[i + j] = (out[i + j] + x[i] * y[j]) % p;
        fp_trim(out);
        return out;
    };
    auto sub = [p](FpPoly x, const FpPoly& y) {
        if (x.size() < y.size()) x.resize(y.size(), 0);
        for (size_t i = 0; i < y.size(); ++i) x[i] = ((x[i] - y[i]) % p + p) % p;
        fp_trim(x);
        return x;
    };
    while (!r1.empty()) {
        // divide r0 by r1
        FpPoly quot(r0.size() > r1.size() - 1 ? r0.size() - r1.size() + 1 : 1, 0);
        FpPoly rem = r0;
        const long lead_inv =
            static_cast<long>(mod_inverse(r1.back(), p).convert_to<long>());
        while (rem.size() >= r1.size() && !rem.empty()) {
            const long c = rem.back() * lead_inv % p;
            const size_t shift = rem.size() - r1.size();
            quot[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = ((rem[shift + i] - c * r1[i]) % p + p) % p;
            fp_trim(rem);
        }
        fp_trim(quot);
        FpPoly s2 = sub(s0, mul(quot, s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.size() != 1) return {};  // gcd has positive degree: not a unit
    const long ginv =
        static_cast<long>(mod_inverse(r0[0], p).convert_to<long>());
    for (auto& c : s0) c = c * ginv % p;
    return fp_rem(s0, f, p);
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::make(CtxPtr ctx,
                                             std::vector<BigInt> modulus) {
    if (modulus.size() < 2) throw Error("modulus must have degree >= 1");
    if (modulus.back() != 1) throw Error("modulus must be monic");
    struct Access : Algebra {};
    auto alg = std::make_shared<Access>();
    alg->ctx_ = std::move(ctx);
    alg->rank_ = static_cast<int>(modulus.size()) - 1;
    alg->modulus_int_ = std::move(modulus);
    return alg;
}

bool Algebra::same(const Algebra& other) const {
    return ctx_->same(*other.ctx_) && modulus_int_ == other.modulus_int_;
}

AlgebraElement::AlgebraElement(AlgPtr alg, std::vector<PadicInt> coeffs)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != alg_->rank())
        throw AlgebraMismatch("coefficient vector length != rank");
    for (const auto& c : coeffs_)
        if (!c.ctx()->same(*alg_->ctx()))
            throw ContextMismatch("coefficient from a foreign context");
}

AlgebraElement AlgebraElement::from_integers(const AlgPtr& alg,
                                             const std::vector<BigInt>& coeffs) {
    if (static_cast<int>(coeffs.size()) > alg->rank())
        throw AlgebraMismatch("too many coefficients");
    std::vector<PadicInt> out;
    out.reserve(alg->rank());
    for (int j = 0; j < alg->rank(); ++j)
        out.emplace_back(alg->ctx(),
                         j < static_cast<int>(coeffs.size()) ? coeffs[j] : 0);
    return AlgebraElement(alg, std::move(out));
}

AlgebraElement AlgebraElement::zero(const AlgPtr& alg) {
    return from_integers(alg, {});
}

AlgebraElement AlgebraElement::one(const AlgPtr& alg) {
    return from_integers(alg, {1});
}

AlgebraElement AlgebraElement::generator(const AlgPtr& alg) {
    return from_integers(alg, {0, 1});
}

void AlgebraElement::check_same_alg(const AlgebraElement& rhs) const {
    if (!alg_->same(*rhs.alg_))
        throw AlgebraMismatch("elements of different algebras");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
    check_same_alg(rhs);
    std::vector<PadicInt> out;
    out.reserve(coeffs_.size());
    for (size_t j = 0; j < coeffs_.size(); ++j)
        out.push_back(coeffs_[j] + rhs.coeffs_[j]);
    return AlgebraElement(alg_, std::move(out));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
    check_same_alg(rhs);
    std::vector<PadicInt> out;
    out.reserve(coeffs_.size());
    for (size_t j = 0; j < coeffs_.size(); ++j)
        out.push_back(coeffs_[j] - rhs.coeffs_[j]);
    return AlgebraElement(alg_, std::move(out));
}

AlgebraElement AlgebraElement::operator-() const {
    std::vector<PadicInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return AlgebraElement(alg_, std::move(out));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
    check_same_alg(rhs);
    const int r = alg_->rank();
    const BigInt& mod = alg_->ctx()->modulus;
    int known = std::min(known_prec(), rhs.known_prec());
    std::vector<BigInt> prod(2 * r - 1, 0);
    for (int i = 0; i < r; ++i) {
        if (coeffs_[i].residue() == 0) continue;
        for (int j = 0; j < r; ++j)
            prod[i + j] = (prod[i + j] + coeffs_[i].residue() * rhs.coeffs_[j].residue()) % mod;
    }
    // reduce by the monic modulus: x^r = -(m_0 + ... + m_{r-1} x^{r-1})
    const auto& m = alg_->modulus_int();
    for (int i = 2 * r - 2; i >= r; --i) {
        const BigInt c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < r; ++j)
            prod[i - r + j] = mod_floor(prod[i - r + j] - c * m[j], mod);
    }
    std::vector<PadicInt> out;
    out.reserve(r);
    for (int j = 0; j < r; ++j)
        out.push_back(PadicInt(alg_->ctx(), prod[j]).with_known_prec(known));
    return AlgebraElement(alg_, std::move(out));
}

AlgebraElement AlgebraElement::operator*(const PadicInt& scalar) const {
    std::vector<PadicInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c * scalar);
    return AlgebraElement(alg_, std::move(out));
}

std::optional<int> AlgebraElement::module_valuation() const {
    const int v = module_valuation_floor();
    if (v >= known_prec()) return std::nullopt;
    return v;
}

int AlgebraElement::module_valuation_floor() const {
    int v = known_prec();
    for (const auto& c : coeffs_) v = std::min(v, c.valuation_floor());
    return v;
}

bool AlgebraElement::is_zero_at_precision() const {
    return module_valuation_floor() >= known_prec();
}

bool AlgebraElement::is_unit_mod_p() const {
    const long p = alg_->ctx()->p;
    FpPoly a;
    for (const auto& c : coeffs_)
        a.push_back(static_cast<long>(mod_floor(c.residue(), p).convert_to<long>()));
    FpPoly f;
    for (const auto& c : alg_->modulus_int())
        f.push_back(static_cast<long>(mod_floor(c, p).convert_to<long>()));
    return !fp_inverse_mod(a, f, p).empty();
}

AlgebraElement AlgebraElement::invert() const {
    const long p = alg_->ctx()->p;
    FpPoly a;
    for (const auto& c : coeffs_)
        a.push_back(static_cast<long>(mod_floor(c.residue(), p).convert_to<long>()));
    FpPoly f;
    for (const auto& c : alg_->modulus_int())
        f.push_back(static_cast<long>(mod_floor(c, p).convert_to<long>()));
    FpPoly x0 = fp_inverse_mod(a, f, p);
    if (x0.empty()) throw NotAUnit("not a unit of R/pR");
    std::vector<BigInt> lift(x0.begin(), x0.end());
    AlgebraElement x = from_integers(alg_, lift);
    // Newton: x <- x(2 - ax), doubling the number of correct digits
    const AlgebraElement two = from_integers(alg_, {2});
    int correct = 1;
    while (correct < alg_->ctx()->prec) {
        x = x * (two - *this * x);
        correct *= 2;
    }
    // carry the input's known precision
    const int known = known_prec();
    std::vector<PadicInt> out;
    for (const auto& c : x.coeffs_) out.push_back(c.with_known_prec(known));
    return AlgebraElement(alg_, std::move(out));
}

AlgebraElement AlgebraElement::pow(long e) const {
    if (e < 0) return invert().pow(-e);
    AlgebraElement base = *this;
    AlgebraElement acc = one(alg_);
    {
        std::vector<PadicInt> c;
        for (const auto& x : acc.coeffs_) c.push_back(x.with_known_prec(known_prec()));
        acc = AlgebraElement(alg_, std::move(c));
    }
    unsigned long ue = static_cast<unsigned long>(e);
    while (ue) {
        if (ue & 1) acc = acc * base;
        base = base * base;
        ue >>= 1;
    }
    return acc;
}

PadicInt AlgebraElement::norm() const {
    std::vector<BigInt> g;
    for (const auto& c : coeffs_) g.push_back(c.residue());
    const BigInt res = resultant_int(alg_->modulus_int(), g);
    return PadicInt(alg_->ctx(), res).with_known_prec(known_prec());
}

AlgebraElement AlgebraElement::divided_by_p_pow(int v) const {
    std::vector<PadicInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.divided_by_p_pow(v));
    return AlgebraElement(alg_, std::move(out));
}

AlgebraElement AlgebraElement::exact_div(const BigInt& d) const {
    std::vector<PadicInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.exact_div(d));
    return AlgebraElement(alg_, std::move(out));
}

int AlgebraElement::known_prec() const {
    int k = alg_->ctx()->prec;
    for (const auto& c : coeffs_) k = std::min(k, c.known_prec());
    return k;
}

bool AlgebraElement::congruent_to(const AlgebraElement& rhs) const {
    check_same_alg(rhs);
    for (size_t j = 0; j < coeffs_.size(); ++j)
        if (!coeffs_[j].congruent_to(rhs.coeffs_[j])) return false;
    return true;
}

bool AlgebraElement::congruent_mod(const AlgebraElement& rhs, int k) const {
    check_same_alg(rhs);
    for (size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j].residue_mod(k) != rhs.coeffs_[j].residue_mod(k))
            return false;
    return true;
}

BigInt resultant_int(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
    auto degree = [](const std::vector<BigInt>& a) {
        int d = static_cast<int>(a.size()) - 1;
        while (d >= 0 && a[d] == 0) --d;
        return d;
    };
    const int m = degree(f);
    const int n = degree(g);
    if (m < 0 || n < 0) return 0;  // resultant with the zero polynomial
    if (n == 0) return pow_int(g[0], static_cast<unsigned long>(m));
    if (m == 0) return pow_int(f[0], static_cast<unsigned long>(n));
    const int size = m + n;
    std::vector<std::vector<BigInt>> M(size, std::vector<BigInt>(size, 0));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) M[row][row + m - i] = f[i];
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i) M[n + row][row + n - i] = g[i];
    // Bareiss fraction-free elimination
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (M[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < size; ++i)
                if (M[i][k] != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign * M[size - 1][size - 1];
}

}  // namespace skolem
