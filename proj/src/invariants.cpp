#include "superschur/invariants.hpp"

#include <stdexcept>

namespace superschur {

GradedSubspace derived(const SuperAlgebra& alg) {
    GradedSubspace full = full_space(alg.dim());
    return bracket_span(alg, full, full);
}

GradedSubspace center(const SuperAlgebra& alg) {
    GradedDim dim = alg.dim();
    std::size_t n = dim.total();
    // Per parity block p: rows of the system are indexed by the block's
    // coordinates, columns by (k, t) over all basis vectors e_k and all
    // target coordinates t. v is central iff v * A = 0.
    auto central_block = [&](int parity) {
        std::size_t count = parity ? dim.odd : dim.even;
        std::size_t offset = parity ? dim.even : 0;
        Matrix sys(count, n * n);
        for (std::size_t r = 0; r < count; ++r) {
            std::size_t i = offset + r;
            for (std::size_t k = 0; k < n; ++k) {
                auto w = alg.bracket_basis(i, k);
                for (std::size_t t = 0; t < n; ++t)
                    if (!w[t].is_zero())
                        sys(r, k * n + t) = w[t];
            }
        }
        return linalg::kernel_basis(linalg::transpose(sys));
    };
    return GradedSubspace{dim, central_block(0), central_block(1)};
}

namespace {

GradedSubspace even_part(const GradedDim& dim) {
    return GradedSubspace{dim, Matrix::identity(dim.even), Matrix(0, dim.odd)};
}

GradedSubspace odd_part(const GradedDim& dim) {
    return GradedSubspace{dim, Matrix(0, dim.even), Matrix::identity(dim.odd)};
}

std::vector<GradedSubspace> run_series(const SuperAlgebra& alg, const GradedSubspace& start,
                                       const GradedSubspace& multiplier) {
    std::vector<GradedSubspace> series{start};
    for (;;) {
        const GradedSubspace& prev = series.back();
        GradedSubspace next = bracket_span(alg, multiplier, prev);
        if (next.dim() == prev.dim())
            break;
        series.push_back(std::move(next));
        if (series.back().dim().total() == 0)
            break;
    }
    return series;
}

/* Least k with series[k] = 0, or nullopt when the series never vanishes. */
std::optional<std::size_t> vanish_index(const std::vector<GradedSubspace>& series) {
    for (std::size_t k = 0; k < series.size(); ++k)
        if (series[k].dim().total() == 0)
            return k;
    return std::nullopt;
}

} // namespace

LowerCentralSeries lower_central_series(const SuperAlgebra& alg) {
    GradedDim dim = alg.dim();
    LowerCentralSeries out;
    out.whole = run_series(alg, full_space(dim), full_space(dim));
    out.even_seq = run_series(alg, even_part(dim), even_part(dim));
    out.odd_seq = run_series(alg, odd_part(dim), even_part(dim));
    return out;
}

NilpotencyResult is_nilpotent(const SuperAlgebra& alg) {
    LowerCentralSeries series = lower_central_series(alg);
    NilpotencyResult res;
    auto whole = vanish_index(series.whole);
    auto p = vanish_index(series.even_seq);
    auto q = vanish_index(series.odd_seq);
    res.nilpotent = whole.has_value();
    bool split_vanish = p.has_value() && q.has_value();
    if (res.nilpotent != split_vanish)
        throw std::logic_error("is_nilpotent: whole-series and split-sequence criteria disagree");
    if (res.nilpotent) {
        res.nilpotency_class = *whole;
        res.split_indices = {std::max<std::size_t>(*p, 1), std::max<std::size_t>(*q, 1)};
    }
    return res;
}

StructureProfile structure_profile(const SuperAlgebra& alg) {
    StructureProfile sp;
    sp.dim = alg.dim();
    sp.derived_dim = derived(alg).dim();
    sp.center_dim = center(alg).dim();
    NilpotencyResult nil = is_nilpotent(alg);
    sp.nilpotent = nil.nilpotent;
    sp.nilpotency_class = nil.nilpotency_class;
    sp.split_indices = nil.split_indices;
    return sp;
}

} // namespace superschur
