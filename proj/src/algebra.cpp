#include "superschur/algebra.hpp"

#include <stdexcept>

namespace superschur {

namespace {

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

void axpy(std::vector<Rational>& acc, const Rational& c, const std::vector<Rational>& v) {
    if (c.is_zero())
        return;
    for (std::size_t t = 0; t < v.size(); ++t)
        if (!v[t].is_zero())
            acc[t] += c * v[t];
}

} // namespace

void SuperAlgebra::set_bracket(std::size_t i, std::size_t j, const std::vector<Rational>& coeffs) {
    if (i >= total() || j >= total())
        throw std::invalid_argument("set_bracket: basis index out of range");
    if (!canonical_pair(i, j))
        throw std::invalid_argument("set_bracket: pair (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is not canonical");
    if (coeffs.size() != total())
        throw std::invalid_argument("set_bracket: coefficient vector length mismatch");
    int target = (parity(i) + parity(j)) % 2;
    for (std::size_t t = 0; t < coeffs.size(); ++t)
        if (!coeffs[t].is_zero() && parity(t) != target)
            throw std::invalid_argument("set_bracket: grading violated at pair (" +
                                        std::to_string(i) + "," + std::to_string(j) +
                                        "), coordinate " + std::to_string(t));
    if (all_zero(coeffs))
        sc_.erase(PairKey{i, j});
    else
        sc_[PairKey{i, j}] = coeffs;
}

std::vector<Rational> SuperAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    std::vector<Rational> out(total());
    if (i == j && parity(i) == 0)
        return out;
    bool swap = !canonical_pair(i, j);
    PairKey key = swap ? PairKey{j, i} : PairKey{i, j};
    auto it = sc_.find(key);
    if (it == sc_.end())
        return out;
    // [e_i, e_j] = -(-1)^{|i||j|} [e_j, e_i]
    Rational factor = (swap && !(parity(i) && parity(j))) ? Rational(-1) : Rational(1);
    for (std::size_t t = 0; t < total(); ++t)
        if (!it->second[t].is_zero())
            out[t] = factor * it->second[t];
    return out;
}

std::vector<Rational> SuperAlgebra::bracket(const std::vector<Rational>& u,
                                            const std::vector<Rational>& v) const {
    if (u.size() != total() || v.size() != total())
        throw std::invalid_argument("bracket: coordinate vector length mismatch");
    std::vector<Rational> out(total());
    // Iterate the canonical table once; each stored pair (i,j) carries the
    // contribution of both orders of its arguments.
    for (const auto& [key, w] : sc_) {
        Rational coef;
        if (key.i == key.j) {
            coef = u[key.i] * v[key.i];
        } else {
            bool both_odd = parity(key.i) && parity(key.j);
            coef = both_odd ? u[key.i] * v[key.j] + u[key.j] * v[key.i]
                            : u[key.i] * v[key.j] - u[key.j] * v[key.i];
        }
        axpy(out, coef, w);
    }
    return out;
}

ValidationReport validate(const SuperAlgebra& alg) {
    ValidationReport rep;
    std::size_t n = alg.total();
    // Structural pass: canonical keys, vector lengths, grading support.
    for (const auto& [key, w] : alg.table()) {
        if (key.i >= n || key.j >= n) {
            rep.structural.push_back("index out of range in pair (" + std::to_string(key.i) +
                                     "," + std::to_string(key.j) + ")");
            continue;
        }
        if (!alg.canonical_pair(key.i, key.j))
            rep.structural.push_back("non-canonical pair (" + std::to_string(key.i) + "," +
                                     std::to_string(key.j) + ")");
        if (w.size() != n) {
            rep.structural.push_back("coefficient length mismatch at pair (" +
                                     std::to_string(key.i) + "," + std::to_string(key.j) + ")");
            continue;
        }
        int target = (alg.parity(key.i) + alg.parity(key.j)) % 2;
        for (std::size_t t = 0; t < n; ++t)
            if (!w[t].is_zero() && alg.parity(t) != target)
                rep.structural.push_back("grading violated at pair (" + std::to_string(key.i) +
                                         "," + std::to_string(key.j) + "), coordinate " +
                                         std::to_string(t));
    }
    if (!rep.structural.empty()) {
        rep.ok = false;
        return rep;
    }

    // Exhaustive graded Jacobi over canonical triples i <= j <= k; repeated
    // indices are only meaningful (and only canonical) at odd positions.
    auto ad = [&](std::size_t a, const std::vector<Rational>& w) {
        std::vector<Rational> out(n);
        for (std::size_t t = 0; t < n; ++t)
            if (!w[t].is_zero())
                axpy(out, w[t], alg.bracket_basis(a, t));
        return out;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (i == j && alg.parity(i) == 0)
                continue;
            for (std::size_t k = j; k < n; ++k) {
                if (j == k && alg.parity(j) == 0)
                    continue;
                std::vector<Rational> sum(n);
                int pi = alg.parity(i), pj = alg.parity(j), pk = alg.parity(k);
                Rational s1((pi * pk) % 2 ? -1 : 1);
                Rational s2((pj * pi) % 2 ? -1 : 1);
                Rational s3((pk * pj) % 2 ? -1 : 1);
                axpy(sum, s1, ad(i, alg.bracket_basis(j, k)));
                axpy(sum, s2, ad(j, alg.bracket_basis(k, i)));
                axpy(sum, s3, ad(k, alg.bracket_basis(i, j)));
                if (!all_zero(sum))
                    rep.jacobi.push_back({{i, j, k}, sum});
            }
        }
    }
    rep.ok = rep.jacobi.empty();
    return rep;
}

GradedSubspace make_subspace(GradedDim ambient, const Matrix& even_rows, const Matrix& odd_rows) {
    if (even_rows.cols() != ambient.even || odd_rows.cols() != ambient.odd)
        throw std::invalid_argument("make_subspace: coordinate count mismatch");
    return GradedSubspace{ambient, linalg::row_space(even_rows), linalg::row_space(odd_rows)};
}

GradedSubspace full_space(GradedDim dim) {
    return GradedSubspace{dim, Matrix::identity(dim.even), Matrix::identity(dim.odd)};
}

GradedSubspace zero_space(GradedDim dim) {
    return GradedSubspace{dim, Matrix(0, dim.even), Matrix(0, dim.odd)};
}

GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b) {
    if (!(a.ambient == b.ambient))
        throw std::invalid_argument("subspace_sum: ambient mismatch");
    return GradedSubspace{a.ambient, linalg::subspace_sum(a.even_basis, b.even_basis),
                          linalg::subspace_sum(a.odd_basis, b.odd_basis)};
}

GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b) {
    if (!(a.ambient == b.ambient))
        throw std::invalid_argument("intersect: ambient mismatch");
    return GradedSubspace{a.ambient, linalg::intersect(a.even_basis, b.even_basis),
                          linalg::intersect(a.odd_basis, b.odd_basis)};
}

bool contains(const GradedSubspace& outer, const GradedSubspace& inner) {
    if (!(outer.ambient == inner.ambient))
        throw std::invalid_argument("contains: ambient mismatch");
    return linalg::contains(outer.even_basis, inner.even_basis) &&
           linalg::contains(outer.odd_basis, inner.odd_basis);
}

std::vector<Rational> embed(const GradedDim& dim, int parity, const std::vector<Rational>& coords) {
    std::vector<Rational> out(dim.total());
    std::size_t offset = parity ? dim.even : 0;
    for (std::size_t t = 0; t < coords.size(); ++t)
        out[offset + t] = coords[t];
    return out;
}

std::vector<Rational> restrict_parity(const GradedDim& dim, int parity,
                                      const std::vector<Rational>& full) {
    std::size_t offset = parity ? dim.even : 0;
    std::size_t count = parity ? dim.odd : dim.even;
    return std::vector<Rational>(full.begin() + offset, full.begin() + offset + count);
}

GradedSubspace bracket_span(const SuperAlgebra& alg, const GradedSubspace& i_space,
                            const GradedSubspace& j_space) {
    if (!(i_space.ambient == alg.dim()) || !(j_space.ambient == alg.dim()))
        throw std::invalid_argument("bracket_span: ambient mismatch");
    GradedDim dim = alg.dim();
    auto homogeneous_rows = [&](const GradedSubspace& s) {
        std::vector<std::pair<int, std::vector<Rational>>> rows;
        for (std::size_t r = 0; r < s.even_basis.rows(); ++r)
            rows.emplace_back(0, embed(dim, 0, s.even_basis.row(r)));
        for (std::size_t r = 0; r < s.odd_basis.rows(); ++r)
            rows.emplace_back(1, embed(dim, 1, s.odd_basis.row(r)));
        return rows;
    };
    auto lhs = homogeneous_rows(i_space);
    auto rhs = homogeneous_rows(j_space);
    Matrix even_gens(0, dim.even), odd_gens(0, dim.odd);
    for (const auto& [pu, u] : lhs) {
        for (const auto& [pv, v] : rhs) {
            std::vector<Rational> w = alg.bracket(u, v);
            int parity = (pu + pv) % 2;
            auto coords = restrict_parity(dim, parity, w);
            bool zero = true;
            for (const auto& x : coords)
                if (!x.is_zero()) {
                    zero = false;
                    break;
                }
            if (zero)
                continue;
            (parity ? odd_gens : even_gens).append_row(coords);
        }
    }
    return GradedSubspace{dim, linalg::row_space(even_gens), linalg::row_space(odd_gens)};
}

namespace {

/* Greedy deterministic complement: walk standard basis vectors in index
 * order, keep those that enlarge the span of the ideal's parity block.
 */
std::vector<std::size_t> greedy_complement(const Matrix& basis, std::size_t dim) {
    std::vector<std::size_t> picked;
    Matrix work = basis;
    std::size_t r = linalg::rank(work);
    for (std::size_t c = 0; c < dim && r < dim; ++c) {
        std::vector<Rational> e(dim);
        e[c] = Rational(1);
        Matrix trial = work;
        trial.append_row(e);
        std::size_t nr = linalg::rank(trial);
        if (nr > r) {
            picked.push_back(c);
            work = trial;
            r = nr;
        }
    }
    return picked;
}

} // namespace

Quotient quotient(const SuperAlgebra& alg, const GradedSubspace& ideal) {
    if (!(ideal.ambient == alg.dim()))
        throw std::invalid_argument("quotient: ambient mismatch");
    GradedSubspace image = bracket_span(alg, full_space(alg.dim()), ideal);
    if (!contains(ideal, image))
        throw std::invalid_argument("quotient: subspace is not a graded ideal");

    GradedDim dim = alg.dim();
    auto comp_even = greedy_complement(ideal.even_basis, dim.even);
    auto comp_odd = greedy_complement(ideal.odd_basis, dim.odd);

    // Square basis matrix per parity: complement standard vectors first, then
    // the ideal's RREF rows; the projection is the leading column block of
    // its inverse (row-vector convention: v_quotient = v * P).
    auto build_projection = [](const std::vector<std::size_t>& comp, const Matrix& ideal_rows,
                               std::size_t d) {
        Matrix m(0, d);
        for (std::size_t c : comp) {
            std::vector<Rational> e(d);
            e[c] = Rational(1);
            m.append_row(e);
        }
        for (std::size_t r = 0; r < ideal_rows.rows(); ++r)
            m.append_row(ideal_rows.row(r));
        Matrix inv = linalg::inverse(m);
        Matrix proj(d, comp.size());
        for (std::size_t t = 0; t < d; ++t)
            for (std::size_t a = 0; a < comp.size(); ++a)
                proj(t, a) = inv(t, a);
        return proj;
    };
    Matrix proj_even = build_projection(comp_even, ideal.even_basis, dim.even);
    Matrix proj_odd = build_projection(comp_odd, ideal.odd_basis, dim.odd);

    GradedDim qdim{comp_even.size(), comp_odd.size()};
    SuperAlgebra q(qdim);
    auto ambient_index = [&](std::size_t a) {
        return a < qdim.even ? comp_even[a] : dim.even + comp_odd[a - qdim.even];
    };
    for (std::size_t a = 0; a < qdim.total(); ++a) {
        for (std::size_t b = a; b < qdim.total(); ++b) {
            if (!q.canonical_pair(a, b))
                continue;
            std::vector<Rational> w = alg.bracket_basis(ambient_index(a), ambient_index(b));
            int parity = (q.parity(a) + q.parity(b)) % 2;
            auto coords = restrict_parity(dim, parity, w);
            auto qcoords = linalg::mul_row(coords, parity ? proj_odd : proj_even);
            q.set_bracket(a, b, embed(qdim, parity, qcoords));
        }
    }
    if (!validate(q).ok)
        throw std::logic_error("quotient: result fails validation");
    return Quotient{std::move(q), std::move(comp_even), std::move(comp_odd),
                    std::move(proj_even), std::move(proj_odd)};
}

SuperAlgebra change_basis(const SuperAlgebra& alg, const Matrix& p_even, const Matrix& p_odd) {
    GradedDim dim = alg.dim();
    if (p_even.rows() != dim.even || p_even.cols() != dim.even || p_odd.rows() != dim.odd ||
        p_odd.cols() != dim.odd)
        throw std::invalid_argument("change_basis: block shape mismatch");
    Matrix inv_even = dim.even ? linalg::inverse(p_even) : Matrix(0, 0);
    Matrix inv_odd = dim.odd ? linalg::inverse(p_odd) : Matrix(0, 0);
    auto new_vector = [&](std::size_t a) {
        int p = a < dim.even ? 0 : 1;
        auto row = p ? p_odd.row(a - dim.even) : p_even.row(a);
        return embed(dim, p, row);
    };
    SuperAlgebra out(dim);
    for (std::size_t a = 0; a < dim.total(); ++a) {
        for (std::size_t b = a; b < dim.total(); ++b) {
            if (!out.canonical_pair(a, b))
                continue;
            std::vector<Rational> w = alg.bracket(new_vector(a), new_vector(b));
            int parity = (out.parity(a) + out.parity(b)) % 2;
            auto coords = restrict_parity(dim, parity, w);
            auto new_coords = linalg::mul_row(coords, parity ? inv_odd : inv_even);
            out.set_bracket(a, b, embed(dim, parity, new_coords));
        }
    }
    return out;
}

} // namespace superschur
