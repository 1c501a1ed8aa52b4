#include "superschur/matrix.hpp"

#include <stdexcept>

namespace superschur::linalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    Matrix m(0, cols);
    m.rows_ = rows.size();
    m.a_.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols)
            throw std::invalid_argument("Matrix::from_rows: row length mismatch");
        m.a_.insert(m.a_.end(), r.begin(), r.end());
    }
    return m;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
    return std::vector<Rational>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void Matrix::append_row(const std::vector<Rational>& r) {
    if (r.size() != cols_)
        throw std::invalid_argument("Matrix::append_row: row length mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
}

bool Matrix::is_zero_row(std::size_t i) const {
    for (std::size_t c = 0; c < cols_; ++c)
        if (!a_[i * cols_ + c].is_zero())
            return false;
    return true;
}

RrefResult rref(Matrix m) {
    RrefResult res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(p, r);
        if (m(r, c) != Rational(1)) {
            Rational inv = m(r, c).reciprocal();
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= f * m(r, j);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    res.r = std::move(m);
    return res;
}

std::size_t rank(const Matrix& m) {
    return rref(m).rank;
}

Matrix kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivot_cols)
        is_pivot[c] = true;
    Matrix basis(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(m.cols());
        v[f] = Rational(1);
        for (std::size_t t = 0; t < rr.rank; ++t)
            v[rr.pivot_cols[t]] = -rr.r(t, f);
        basis.append_row(v);
    }
    return row_space(basis);
}

Matrix row_space(const Matrix& m) {
    RrefResult rr = rref(m);
    Matrix out(0, m.cols());
    for (std::size_t i = 0; i < rr.rank; ++i)
        out.append_row(rr.r.row(i));
    return out;
}

Matrix subspace_sum(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
    Matrix stack(0, a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        stack.append_row(a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i)
        stack.append_row(b.row(i));
    return row_space(stack);
}

Matrix intersect(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    std::size_t d = a.cols(), ra = a.rows(), rb = b.rows();
    Matrix sys(d, ra + rb);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t t = 0; t < d; ++t)
            sys(t, i) = a(i, t);
    for (std::size_t j = 0; j < rb; ++j)
        for (std::size_t t = 0; t < d; ++t)
            sys(t, ra + j) = -b(j, t);
    Matrix ker = kernel_basis(sys);
    Matrix vectors(0, d);
    for (std::size_t k = 0; k < ker.rows(); ++k) {
        std::vector<Rational> v(d);
        for (std::size_t i = 0; i < ra; ++i) {
            if (ker(k, i).is_zero())
                continue;
            for (std::size_t t = 0; t < d; ++t)
                if (!a(i, t).is_zero())
                    v[t] += ker(k, i) * a(i, t);
        }
        vectors.append_row(v);
    }
    return row_space(vectors);
}

bool contains(const Matrix& space, const Matrix& vectors) {
    if (space.cols() != vectors.cols())
        throw std::invalid_argument("contains: ambient dimension mismatch");
    std::size_t base = rank(space);
    Matrix stacked = subspace_sum(space, vectors);
    return stacked.rows() == base;
}

bool contains_vector(const Matrix& space, const std::vector<Rational>& v) {
    Matrix one(0, space.cols());
    one.append_row(v);
    return contains(space, one);
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t(j, i) = m(i, j);
    return t;
}

Matrix mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mul: inner dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

std::vector<Rational> mul_row(const std::vector<Rational>& v, const Matrix& m) {
    if (v.size() != m.rows())
        throw std::invalid_argument("mul_row: dimension mismatch");
    std::vector<Rational> out(m.cols());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(k, j).is_zero())
                out[j] += v[k] * m(k, j);
    }
    return out;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    std::size_t n = m.rows();
    if (n == 0)
        return m;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1)
        throw std::invalid_argument("inverse: singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = rr.r(i, n + j);
    return inv;
}

bool is_rref(const Matrix& m) {
    long last_pivot = -1;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m.is_zero_row(i)) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row)
            return false;
        std::size_t lead = 0;
        while (m(i, lead).is_zero())
            ++lead;
        if (static_cast<long>(lead) <= last_pivot)
            return false;
        if (m(i, lead) != Rational(1))
            return false;
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != i && !m(r, lead).is_zero())
                return false;
        last_pivot = static_cast<long>(lead);
    }
    return true;
}

} // namespace superschur::linalg
