#include "superschur/homology.hpp"

#include <stdexcept>

namespace superschur {

ChainBasis2 ChainBasis2::enumerate(const SuperAlgebra& alg) {
    ChainBasis2 b;
    std::size_t m = alg.dim().even, n = alg.dim().odd;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            b.even_gens.emplace_back(i, j);
    for (std::size_t i = m; i < m + n; ++i)
        for (std::size_t j = i; j < m + n; ++j)
            b.even_gens.emplace_back(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = m; j < m + n; ++j)
            b.odd_gens.emplace_back(i, j);
    for (std::size_t idx = 0; idx < b.even_gens.size(); ++idx)
        b.even_index[b.even_gens[idx]] = idx;
    for (std::size_t idx = 0; idx < b.odd_gens.size(); ++idx)
        b.odd_index[b.odd_gens[idx]] = idx;
    return b;
}

ChainBasis3 ChainBasis3::enumerate(const SuperAlgebra& alg) {
    ChainBasis3 b;
    std::size_t m = alg.dim().even, n = alg.dim().odd;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                b.even_gens.push_back({i, j, k});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = m; j < m + n; ++j)
            for (std::size_t k = j; k < m + n; ++k)
                b.even_gens.push_back({i, j, k});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = m; k < m + n; ++k)
                b.odd_gens.push_back({i, j, k});
    for (std::size_t i = m; i < m + n; ++i)
        for (std::size_t j = i; j < m + n; ++j)
            for (std::size_t k = j; k < m + n; ++k)
                b.odd_gens.push_back({i, j, k});
    return b;
}

BoundaryMaps d2_matrix(const SuperAlgebra& alg) {
    ChainBasis2 c2 = ChainBasis2::enumerate(alg);
    GradedDim dim = alg.dim();
    Matrix even(c2.even_gens.size(), dim.even);
    for (std::size_t r = 0; r < c2.even_gens.size(); ++r) {
        auto [i, j] = c2.even_gens[r];
        auto w = restrict_parity(dim, 0, alg.bracket_basis(i, j));
        for (std::size_t t = 0; t < dim.even; ++t)
            even(r, t) = w[t];
    }
    Matrix odd(c2.odd_gens.size(), dim.odd);
    for (std::size_t r = 0; r < c2.odd_gens.size(); ++r) {
        auto [i, j] = c2.odd_gens[r];
        auto w = restrict_parity(dim, 1, alg.bracket_basis(i, j));
        for (std::size_t t = 0; t < dim.odd; ++t)
            odd(r, t) = w[t];
    }
    return BoundaryMaps{std::move(even), std::move(odd)};
}

std::vector<std::pair<std::size_t, Rational>> boundary3(const SuperAlgebra& alg,
                                                        const ChainBasis2& c2, std::size_t a,
                                                        std::size_t b, std::size_t c) {
    int pa = alg.parity(a), pb = alg.parity(b), pc = alg.parity(c);
    int block = (pa + pb + pc) % 2;
    const auto& index = block ? c2.odd_index : c2.even_index;
    std::map<std::size_t, Rational> acc;
    // One wedge term sign * [x,y] ∧ e_u, re-canonicalized coordinatewise.
    auto add_term = [&](Rational sign, std::size_t x, std::size_t y, std::size_t u) {
        auto w = alg.bracket_basis(x, y);
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (w[t].is_zero())
                continue;
            std::size_t lo = t, hi = u;
            Rational factor(1);
            if (lo == hi) {
                if (alg.parity(lo) == 0)
                    continue; // e∧e = 0 on even vectors
            } else if (lo > hi) {
                std::swap(lo, hi);
                // u∧v = -(-1)^{|u||v|} v∧u
                factor = (alg.parity(lo) && alg.parity(hi)) ? Rational(1) : Rational(-1);
            }
            auto it = index.find({lo, hi});
            if (it == index.end())
                throw std::logic_error("boundary3: wedge term has wrong parity block");
            Rational contrib = sign * w[t] * factor;
            if (!contrib.is_zero())
                acc[it->second] += contrib;
        }
    };
    add_term(Rational(1), a, b, c);
    add_term((pb * pc) % 2 ? Rational(1) : Rational(-1), a, c, b);
    add_term((pa * (pb + pc)) % 2 ? Rational(-1) : Rational(1), b, c, a);
    std::vector<std::pair<std::size_t, Rational>> out;
    for (auto& [col, val] : acc)
        if (!val.is_zero())
            out.emplace_back(col, val);
    return out;
}

BoundaryMaps d3_matrix(const SuperAlgebra& alg) {
    ChainBasis2 c2 = ChainBasis2::enumerate(alg);
    ChainBasis3 c3 = ChainBasis3::enumerate(alg);
    Matrix even(c3.even_gens.size(), c2.even_gens.size());
    for (std::size_t r = 0; r < c3.even_gens.size(); ++r) {
        auto [a, b, c] = c3.even_gens[r];
        for (auto& [col, val] : boundary3(alg, c2, a, b, c))
            even(r, col) = val;
    }
    Matrix odd(c3.odd_gens.size(), c2.odd_gens.size());
    for (std::size_t r = 0; r < c3.odd_gens.size(); ++r) {
        auto [a, b, c] = c3.odd_gens[r];
        for (auto& [col, val] : boundary3(alg, c2, a, b, c))
            odd(r, col) = val;
    }
    return BoundaryMaps{std::move(even), std::move(odd)};
}

MultiplierResult multiplier_dim(const SuperAlgebra& alg) {
    BoundaryMaps d2 = d2_matrix(alg);
    BoundaryMaps d3 = d3_matrix(alg);
    std::size_t ker_even = d2.even.rows() - linalg::rank(d2.even);
    std::size_t ker_odd = d2.odd.rows() - linalg::rank(d2.odd);
    std::size_t rk3_even = linalg::rank(d3.even);
    std::size_t rk3_odd = linalg::rank(d3.odd);
    MultiplierResult res;
    res.even = ker_even - rk3_even;
    res.odd = ker_odd - rk3_odd;
    res.total = res.even + res.odd;
    res.dim_ker_d2 = ker_even + ker_odd;
    res.rank_d3 = rk3_even + rk3_odd;
    return res;
}

bool d2_after_d3_vanishes(const SuperAlgebra& alg) {
    ChainBasis2 c2 = ChainBasis2::enumerate(alg);
    ChainBasis3 c3 = ChainBasis3::enumerate(alg);
    std::size_t n = alg.total();
    auto check_block = [&](const std::vector<std::array<std::size_t, 3>>& gens, int block) {
        const auto& pairs = block ? c2.odd_gens : c2.even_gens;
        for (const auto& [a, b, c] : gens) {
            std::vector<Rational> image(n);
            for (auto& [col, val] : boundary3(alg, c2, a, b, c)) {
                auto [i, j] = pairs[col];
                auto w = alg.bracket_basis(i, j);
                for (std::size_t t = 0; t < n; ++t)
                    if (!w[t].is_zero())
                        image[t] += val * w[t];
            }
            for (const auto& x : image)
                if (!x.is_zero())
                    return false;
        }
        return true;
    };
    return check_block(c3.even_gens, 0) && check_block(c3.odd_gens, 1);
}

} // namespace superschur
