#include "skolem/padic.hpp"

namespace skolem {

std::shared_ptr<const PadicContext> PadicContext::make(long p, int prec) {
    if (!is_prime(p)) throw Error("context modulus p must be prime");
    if (prec < 1) throw Error("working precision must be >= 1");
    auto ctx = std::make_shared<PadicContext>();
    ctx->p = p;
    ctx->q = p == 2 ? 4 : p;
    ctx->prec = prec;
    ctx->modulus = pow_int(p, static_cast<unsigned long>(prec));
    return ctx;
}

PadicInt::PadicInt(CtxPtr ctx, const BigInt& value)
    : ctx_(std::move(ctx)),
      residue_(mod_floor(value, ctx_->modulus)),
      known_(ctx_->prec) {}

PadicInt PadicInt::from_rational(const BigInt& num, const BigInt& den,
                                 const CtxPtr& ctx) {
    if (den == 0) throw ZeroDenominator();
    if (den % ctx->p == 0) throw DenominatorNotUnit();
    return PadicInt(ctx, num * mod_inverse(den, ctx->modulus));
}

std::optional<int> PadicInt::valuation() const {
    const int v = valuation_int(residue_, ctx_->p, known_);
    if (v >= known_) return std::nullopt;
    return v;
}

int PadicInt::valuation_floor() const {
    return valuation_int(residue_, ctx_->p, known_);
}

bool PadicInt::is_zero_at_precision() const {
    return valuation_floor() >= known_;
}

void PadicInt::check_same_ctx(const PadicInt& rhs) const {
    if (!ctx_->same(*rhs.ctx_))
        throw ContextMismatch("p-adic values from different contexts");
}

PadicInt PadicInt::operator+(const PadicInt& rhs) const {
    check_same_ctx(rhs);
    PadicInt out(ctx_, residue_ + rhs.residue_);
    out.known_ = std::min(known_, rhs.known_);
    return out;
}

PadicInt PadicInt::operator-(const PadicInt& rhs) const {
    check_same_ctx(rhs);
    PadicInt out(ctx_, residue_ - rhs.residue_);
    out.known_ = std::min(known_, rhs.known_);
    return out;
}

PadicInt PadicInt::operator*(const PadicInt& rhs) const {
    check_same_ctx(rhs);
    PadicInt out(ctx_, residue_ * rhs.residue_);
    out.known_ = std::min(known_, rhs.known_);
    return out;
}

PadicInt PadicInt::operator-() const {
    PadicInt out(ctx_, -residue_);
    out.known_ = known_;
    return out;
}

PadicInt PadicInt::invert() const {
    if (valuation_floor() > 0) throw NotAUnit("positive valuation");
    PadicInt out(ctx_, mod_inverse(residue_, ctx_->modulus));
    out.known_ = known_;
    return out;
}

PadicInt PadicInt::pow(long e) const {
    if (e < 0) return invert().pow(-e);
    PadicInt base = *this;
    PadicInt acc = PadicInt::one(ctx_).with_known_prec(known_);
    unsigned long ue = static_cast<unsigned long>(e);
    while (ue) {
        if (ue & 1) acc = acc * base;
        base = base * base;
        ue >>= 1;
    }
    return acc;
}

PadicInt PadicInt::divided_by_p_pow(int v) const {
    if (v == 0) return *this;
    if (v < 0 || valuation_floor() < v)
        throw InsufficientPrecision("exact division by p^v needs valuation >= v");
    PadicInt out(ctx_, residue_ / pow_int(ctx_->p, static_cast<unsigned long>(v)));
    out.known_ = known_ - v;
    return out;
}

PadicInt PadicInt::exact_div(const BigInt& d) const {
    if (d == 0) throw ZeroDenominator();
    const int e = valuation_int(d, ctx_->p, ctx_->prec);
    const BigInt unit_part = d / pow_int(ctx_->p, static_cast<unsigned long>(e));
    PadicInt stripped = divided_by_p_pow(e);
    PadicInt out(ctx_, stripped.residue_ * mod_inverse(unit_part, ctx_->modulus));
    out.known_ = stripped.known_;
    return out;
}

BigInt PadicInt::residue_mod(int k) const {
    if (k > known_)
        throw InsufficientPrecision("residue requested beyond known precision");
    return mod_floor(residue_, pow_int(ctx_->p, static_cast<unsigned long>(k)));
}

bool PadicInt::congruent_to(const PadicInt& rhs) const {
    check_same_ctx(rhs);
    const int k = std::min(known_, rhs.known_);
    return residue_mod(k) == rhs.residue_mod(k);
}

PadicInt PadicInt::with_known_prec(int k) const {
    PadicInt out = *this;
    out.known_ = std::min(k, ctx_->prec);
    return out;
}

}  // namespace skolem
