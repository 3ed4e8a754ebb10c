#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skolem/algebra.hpp"
#include "skolem/padic.hpp"

namespace skolem {

namespace detail {

inline int val_floor(const PadicInt& x) { return x.valuation_floor(); }
inline int val_floor(const AlgebraElement& x) { return x.module_valuation_floor(); }

inline const PadicContext& context_of(const PadicInt& x) { return *x.ctx(); }
inline const PadicContext& context_of(const AlgebraElement& x) {
    return *x.alg()->ctx();
}

inline bool same_domain(const PadicInt& a, const PadicInt& b) {
    return a.ctx()->same(*b.ctx());
}
inline bool same_domain(const AlgebraElement& a, const AlgebraElement& b) {
    return a.alg()->same(*b.alg());
}

inline std::vector<BigInt> coeff_residues(const PadicInt& x) {
    return {x.residue()};
}
inline std::vector<BigInt> coeff_residues(const AlgebraElement& x) {
    std::vector<BigInt> out;
    out.reserve(x.coeffs().size());
    for (const auto& c : x.coeffs()) out.push_back(c.residue());
    return out;
}

}  // namespace detail

/// Exponent tuple for a monomial t1^i * t2^j (j = 0 in one variable).
struct Monomial {
    int i = 0;
    int j = 0;
    int total() const { return i + j; }
    auto operator<=>(const Monomial&) const = default;
};

/// Truncated power series in 1 or 2 variables with coefficients in Z_p or
/// in R. `prec` is a certified lower bound on the valuation of every
/// omitted term (unstored or beyond the degree cap); propagation through
/// arithmetic keeps that guarantee sound rather than estimated.
template <class C>
class TruncSeries {
public:
    TruncSeries(int nvars, int degree_cap, int prec, C zero)
        : nvars_(nvars), degree_cap_(degree_cap), prec_(prec),
          zero_(std::move(zero)) {
        if (nvars_ != 1 && nvars_ != 2)
            throw DomainMismatch("TruncSeries supports 1 or 2 variables");
        if (degree_cap_ < 0) throw DomainMismatch("negative degree cap");
        prec_ = std::min(prec_, detail::context_of(zero_).prec);
    }

    int nvars() const { return nvars_; }
    int degree_cap() const { return degree_cap_; }
    int prec() const { return prec_; }
    const C& zero_coeff() const { return zero_; }
    const std::map<Monomial, C>& terms() const { return terms_; }

    const C& coeff(int i, int j = 0) const {
        auto it = terms_.find(Monomial{i, j});
        return it == terms_.end() ? zero_ : it->second;
    }

    void set_coeff(int i, int j, C value) {
        if (j != 0 && nvars_ == 1)
            throw DomainMismatch("second exponent in a 1-variable series");
        if (i < 0 || j < 0 || i + j > degree_cap_)
            throw DomainMismatch("monomial outside degree cap");
        if (!detail::same_domain(value, zero_))
            throw DomainMismatch("coefficient from a different domain");
        terms_.insert_or_assign(Monomial{i, j}, std::move(value));
    }

    void add_to_coeff(const Monomial& m, const C& value) {
        auto it = terms_.find(m);
        if (it == terms_.end())
            terms_.emplace(m, value);
        else
            it->second = it->second + value;
    }

    TruncSeries operator+(const TruncSeries& rhs) const {
        require_compatible(rhs);
        TruncSeries out(nvars_, std::min(degree_cap_, rhs.degree_cap_),
                        std::min(prec_, rhs.prec_), zero_);
        for (const auto& [m, c] : terms_)
            if (m.total() <= out.degree_cap_) out.add_to_coeff(m, c);
        for (const auto& [m, c] : rhs.terms_)
            if (m.total() <= out.degree_cap_) out.add_to_coeff(m, c);
        // stored terms beyond the common cap must be folded into prec
        for (const auto& [m, c] : terms_)
            if (m.total() > out.degree_cap_)
                out.prec_ = std::min(out.prec_, detail::val_floor(c));
        for (const auto& [m, c] : rhs.terms_)
            if (m.total() > out.degree_cap_)
                out.prec_ = std::min(out.prec_, detail::val_floor(c));
        return out;
    }

    TruncSeries operator-() const {
        TruncSeries out(nvars_, degree_cap_, prec_, zero_);
        for (const auto& [m, c] : terms_) out.add_to_coeff(m, -c);
        return out;
    }

    TruncSeries operator-(const TruncSeries& rhs) const { return *this + (-rhs); }

    TruncSeries operator*(const TruncSeries& rhs) const {
        require_compatible(rhs);
        const int cap = std::min(degree_cap_, rhs.degree_cap_);
        TruncSeries out(nvars_, cap, detail::context_of(zero_).prec, zero_);
        int dropped = detail::context_of(zero_).prec;
        for (const auto& [m1, c1] : terms_) {
            for (const auto& [m2, c2] : rhs.terms_) {
                const Monomial m{m1.i + m2.i, m1.j + m2.j};
                if (m.total() > cap) {
                    // valuations are sub-multiplicative, no need to multiply
                    dropped = std::min(
                        dropped, detail::val_floor(c1) + detail::val_floor(c2));
                    continue;
                }
                out.add_to_coeff(m, c1 * c2);
            }
        }
        // omitted(f)*g, f*omitted(g), omitted*omitted, dropped products
        const int vf = stored_min_val();
        const int vg = rhs.stored_min_val();
        int prop = std::min({prec_ + std::min(vg, rhs.prec_),
                             rhs.prec_ + std::min(vf, prec_), dropped});
        out.prec_ = std::min(out.prec_, prop);
        return out;
    }

    /// Multiply every coefficient by a constant from the same domain.
    TruncSeries scalar_mul(const C& s) const {
        TruncSeries out(nvars_, degree_cap_, prec_ + detail::val_floor(s), zero_);
        for (const auto& [m, c] : terms_) out.add_to_coeff(m, c * s);
        return out;
    }

    /// Exact coefficient-wise division by d = ±p^e * m. The omitted-term
    /// guarantee weakens by e.
    TruncSeries exact_div(const BigInt& d) const {
        const int e = valuation_int(d, detail::context_of(zero_).p,
                                    detail::context_of(zero_).prec);
        TruncSeries out(nvars_, degree_cap_, prec_ - e, zero_);
        for (const auto& [m, c] : terms_) out.add_to_coeff(m, c.exact_div(d));
        return out;
    }

    /// f(t1, h(t1)) for a substitution t2 := h(t1) with h over Z_p and zero
    /// constant term. The result is a 1-variable series.
    TruncSeries substitute(const TruncSeries<PadicInt>& h) const {
        if (nvars_ != 2) throw InvalidSubstitution("series is not bivariate");
        if (!h.coeff(0).is_zero_at_precision())
            throw InvalidSubstitution("substitution has nonzero constant term");
        const int cap = std::min(degree_cap_, h.degree_cap());
        const int h_const_val = h.coeff(0).valuation_floor();
        // powers of h as 1-variable Z_p series
        std::vector<TruncSeries<PadicInt>> hp;
        TruncSeries<PadicInt> one(1, cap, detail::context_of(zero_).prec,
                                  h.zero_coeff());
        one.set_coeff(0, 0, PadicInt::one(h.zero_coeff().ctx()));
        hp.push_back(one);
        TruncSeries<PadicInt> h1(1, cap, h.prec(), h.zero_coeff());
        for (const auto& [m, c] : h.terms())
            if (m.i <= cap && !(m.i == 0)) h1.set_coeff(m.i, 0, c);
        int maxj = 0;
        for (const auto& [m, c] : terms_) maxj = std::max(maxj, m.j);
        for (int j = 1; j <= maxj; ++j) hp.push_back(hp.back() * h1);

        TruncSeries out(1, cap, detail::context_of(zero_).prec, zero_);
        int prec = std::min(prec_, detail::context_of(zero_).prec);
        // the dropped constant term of h is only zero at its precision
        bool uses_t2 = false;
        for (const auto& [m, c] : terms_) uses_t2 = uses_t2 || m.j > 0;
        if (uses_t2) prec = std::min(prec, h_const_val);
        for (const auto& [m, c] : terms_) {
            if (m.i > cap) {
                prec = std::min(prec, detail::val_floor(c));
                continue;
            }
            // c * t1^m.i * h(t1)^m.j
            const auto& pw = hp[m.j];
            prec = std::min(prec, pw.prec() + detail::val_floor(c));
            for (const auto& [mm, cc] : pw.terms()) {
                if (m.i + mm.i > cap) {
                    prec = std::min(prec,
                                    detail::val_floor(c) + cc.valuation_floor());
                    continue;
                }
                out.add_to_coeff(Monomial{m.i + mm.i, 0}, c * cc);
            }
        }
        out.prec_ = std::min(out.prec_, prec);
        return out;
    }

    /// Evaluate at a point of Z_p^nvars. Valid at min(prec, coefficient
    /// known precision).
    C eval(const std::vector<PadicInt>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw DomainMismatch("evaluation point arity mismatch");
        C acc = zero_;
        for (const auto& [m, c] : terms_) {
            PadicInt s = point[0].pow(m.i);
            if (nvars_ == 2) s = s * point[1].pow(m.j);
            acc = acc + c * s;
        }
        return acc;
    }

    /// Coefficients of powers of t1 for a univariate series, degrees
    /// 0..degree_cap.
    std::vector<C> coefficient_list() const {
        if (nvars_ != 1) throw DomainMismatch("coefficient_list is univariate");
        std::vector<C> out;
        for (int i = 0; i <= degree_cap_; ++i) out.push_back(coeff(i, 0));
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [m, c] : terms_) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& r : detail::coeff_residues(c))
                coeffs.push_back(to_decimal(r));
            nlohmann::json exp = nvars_ == 2
                                     ? nlohmann::json::array({m.i, m.j})
                                     : nlohmann::json::array({m.i});
            terms.push_back({{"exp", exp}, {"coeffs", coeffs}});
        }
        return {{"p", detail::context_of(zero_).p},
                {"prec", prec_},
                {"degree_cap", degree_cap_},
                {"terms", terms}};
    }

    int stored_min_val() const {
        int v = prec_;
        for (const auto& [m, c] : terms_) v = std::min(v, detail::val_floor(c));
        return std::max(v, 0);
    }

    /// Minimum known precision across coefficients (context N if empty).
    int coeff_known_prec() const {
        int k = detail::context_of(zero_).prec;
        for (const auto& [m, c] : terms_) k = std::min(k, c.known_prec());
        return k;
    }

    /// True iff every stored coefficient vanishes at min(prec, known).
    bool is_zero_at_precision() const {
        for (const auto& [m, c] : terms_)
            if (detail::val_floor(c) < std::min(prec_, c.known_prec()))
                return false;
        return true;
    }

private:
    int nvars_;
    int degree_cap_;
    int prec_;
    C zero_;
    std::map<Monomial, C> terms_;

    void require_compatible(const TruncSeries& rhs) const {
        if (nvars_ != rhs.nvars_ || !detail::same_domain(zero_, rhs.zero_))
            throw DomainMismatch("series domain mismatch");
    }
};

/// Split a series over R into the r coordinate series over Z_p: the j-th
/// output collects the theta^j-coordinate of every coefficient.
std::vector<TruncSeries<PadicInt>> coefficient_vector(
    const TruncSeries<AlgebraElement>& f);

}  // namespace skolem
