#include "skolem/series.hpp"

namespace skolem {

std::vector<TruncSeries<PadicInt>> coefficient_vector(
    const TruncSeries<AlgebraElement>& f) {
    const auto& alg = f.zero_coeff().alg();
    std::vector<TruncSeries<PadicInt>> out;
    out.reserve(alg->rank());
    for (int j = 0; j < alg->rank(); ++j)
        out.emplace_back(f.nvars(), f.degree_cap(), f.prec(),
                         PadicInt::zero(alg->ctx()));
    for (const auto& [m, c] : f.terms())
        for (int j = 0; j < alg->rank(); ++j)
            out[j].set_coeff(m.i, m.j, c.coeff(j));
    return out;
}

}  // namespace skolem
