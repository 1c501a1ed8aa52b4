#include "superschur/models.hpp"

#include <stdexcept>

namespace superschur::models {

SuperAlgebra abelian(std::size_t m, std::size_t n) {
    return SuperAlgebra(GradedDim{m, n});
}

SuperAlgebra heisenberg(std::size_t m, std::size_t n) {
    if (m + n == 0)
        throw std::invalid_argument("heisenberg: m + n must be at least 1");
    GradedDim dim{2 * m + 1, n};
    SuperAlgebra h(dim);
    std::size_t z = 2 * m; // last even index
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rational> w(dim.total());
        w[z] = Rational(1);
        h.set_bracket(i, m + i, w);
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> w(dim.total());
        w[z] = Rational(1);
        h.set_bracket(dim.even + j, dim.even + j, w);
    }
    return h;
}

SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b) {
    GradedDim da = a.dim(), db = b.dim();
    GradedDim dim{da.even + db.even, da.odd + db.odd};
    // Index maps into the reindexed basis (A even, B even, A odd, B odd).
    auto map_a = [&](std::size_t i) { return i < da.even ? i : db.even + i; };
    auto map_b = [&](std::size_t i) {
        return i < db.even ? da.even + i : da.even + da.odd + i;
    };
    SuperAlgebra s(dim);
    auto copy_table = [&](const SuperAlgebra& src, auto&& map) {
        for (const auto& [key, w] : src.table()) {
            std::vector<Rational> out(dim.total());
            for (std::size_t t = 0; t < w.size(); ++t)
                if (!w[t].is_zero())
                    out[map(t)] = w[t];
            s.set_bracket(map(key.i), map(key.j), out);
        }
    };
    copy_table(a, map_a);
    copy_table(b, map_b);
    return s;
}

StemCover stem_cover_heisenberg(std::size_t m, std::size_t n) {
    if (m == 0 && n == 1)
        throw std::invalid_argument(
            "stem_cover_heisenberg: (0,1) has no valid cover of the claimed shape; the bracket "
            "[y,z] = η it would require fails graded Jacobi at (y,y,y), and the computed "
            "multiplier of H(0,1) is 0 (documented discrepancy with the published value 2)");
    if (m + n < 2 && !(m == 1 && n == 0))
        throw std::invalid_argument("stem_cover_heisenberg: need m + n >= 2 or (m,n) = (1,0)");

    if (m == 1 && n == 0) {
        // Classical 5-dimensional cover of the 3-dimensional Heisenberg
        // algebra: here the η generators survive and constitute W.
        GradedDim dim{5, 0};
        SuperAlgebra k(dim);
        auto unit = [&](std::size_t t) {
            std::vector<Rational> v(dim.total());
            v[t] = Rational(1);
            return v;
        };
        k.set_bracket(0, 1, unit(2)); // [x1, x2] = ζ
        k.set_bracket(0, 2, unit(3)); // [x1, ζ] = η1
        k.set_bracket(1, 2, unit(4)); // [x2, ζ] = η2
        Matrix even_rows(0, 5);
        even_rows.append_row(unit(3));
        even_rows.append_row(unit(4));
        return StemCover{std::move(k), make_subspace(dim, even_rows, Matrix(0, 0))};
    }

    // Even layout: x_1..x_2m | ζ | ŵ_2..ŵ_m | v̂_* | w_{k,l} | v_{k',l'}.
    // For m >= 1 all of v̂_1..v̂_n appear; for m = 0, ζ = [y_1,y_1] absorbs
    // v̂_1 and only v̂_2..v̂_n remain.
    std::size_t zeta = 2 * m;
    std::size_t what_base = zeta + 1;                          // ŵ_i for i = 2..m
    std::size_t what_count = m >= 1 ? m - 1 : 0;
    std::size_t vhat_base = what_base + what_count;            // v̂_j
    std::size_t vhat_count = m >= 1 ? n : (n >= 1 ? n - 1 : 0);
    std::size_t wkl_base = vhat_base + vhat_count;             // w_{k,l}
    std::vector<std::pair<std::size_t, std::size_t>> wkl_pairs; // 0-based (k,l), k<l
    for (std::size_t k = 0; k < 2 * m; ++k)
        for (std::size_t l = k + 1; l < 2 * m; ++l)
            if (!(l == m + k))
                wkl_pairs.emplace_back(k, l);
    std::size_t vkl_base = wkl_base + wkl_pairs.size();        // v_{k',l'}
    std::vector<std::pair<std::size_t, std::size_t>> vkl_pairs;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
            vkl_pairs.emplace_back(k, l);
    std::size_t even_total = vkl_base + vkl_pairs.size();

    // Odd layout: y_1..y_n | γ_{k,j} lexicographic by (k, j).
    std::size_t gamma_count = 2 * m * n;
    std::size_t odd_total = n + gamma_count;
    GradedDim dim{even_total, odd_total};

    SuperAlgebra k_alg(dim);
    auto unit = [&](std::size_t t) {
        std::vector<Rational> v(dim.total());
        v[t] = Rational(1);
        return v;
    };
    auto y_index = [&](std::size_t j) { return even_total + j; };          // 0-based j
    auto gamma_index = [&](std::size_t k, std::size_t j) {                 // 0-based
        return even_total + n + k * n + j;
    };

    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rational> v(dim.total());
        v[zeta] = Rational(1);
        if (i >= 1)
            v[what_base + (i - 1)] = Rational(1); // [x_i, x_{m+i}] = ζ + ŵ_i
        k_alg.set_bracket(i, m + i, v);
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> v(dim.total());
        v[zeta] = Rational(1);
        if (m >= 1)
            v[vhat_base + j] = Rational(1);       // [y_j, y_j] = ζ + v̂_j
        else if (j >= 1)
            v[vhat_base + (j - 1)] = Rational(1); // m = 0: v̂_1 absorbed into ζ
        k_alg.set_bracket(y_index(j), y_index(j), v);
    }
    for (std::size_t t = 0; t < wkl_pairs.size(); ++t)
        k_alg.set_bracket(wkl_pairs[t].first, wkl_pairs[t].second, unit(wkl_base + t));
    for (std::size_t t = 0; t < vkl_pairs.size(); ++t)
        k_alg.set_bracket(y_index(vkl_pairs[t].first), y_index(vkl_pairs[t].second),
                          unit(vkl_base + t));
    for (std::size_t k = 0; k < 2 * m; ++k)
        for (std::size_t j = 0; j < n; ++j)
            k_alg.set_bracket(k, y_index(j), unit(gamma_index(k, j)));

    Matrix even_rows(0, even_total);
    for (std::size_t t = what_base; t < even_total; ++t) {
        std::vector<Rational> v(even_total);
        v[t] = Rational(1);
        even_rows.append_row(v);
    }
    Matrix odd_rows(0, odd_total);
    for (std::size_t t = n; t < odd_total; ++t) {
        std::vector<Rational> v(odd_total);
        v[t] = Rational(1);
        odd_rows.append_row(v);
    }
    return StemCover{std::move(k_alg), make_subspace(dim, even_rows, odd_rows)};
}

} // namespace superschur::models
