#pragma once

#include "superschur/rational.hpp"

#include <cstddef>
#include <vector>

namespace superschur::linalg {

/* Dense row-major matrix over the exact rationals. Values are immutable in
 * all public algorithms below (they take copies or const refs); a Matrix is
 * safe to share between threads once built.
 */
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;
    void append_row(const std::vector<Rational>& r);
    void swap_rows(std::size_t i, std::size_t j);
    bool is_zero_row(std::size_t i) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

struct RrefResult {
    Matrix r;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols; // strictly increasing
};

/* Unique reduced row echelon form. Pivoting is deterministic: the first
 * nonzero entry in column order, so outputs are bit-reproducible.
 */
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/* RREF basis of {v : M v = 0}, one kernel vector per row.
 * Row count equals cols(M) - rank(M).
 */
Matrix kernel_basis(const Matrix& m);

/* RREF basis of the row space (nonzero rows of the RREF). */
Matrix row_space(const Matrix& m);

/* RREF basis of rowspace(a) + rowspace(b). Throws on ambient mismatch. */
Matrix subspace_sum(const Matrix& a, const Matrix& b);

/* RREF basis of rowspace(a) ∩ rowspace(b), via the kernel of the stacked
 * system [Aᵀ | -Bᵀ]. Throws on ambient mismatch.
 */
Matrix intersect(const Matrix& a, const Matrix& b);

/* rowspace(space) ⊇ rowspace(vectors)? */
bool contains(const Matrix& space, const Matrix& vectors);

bool contains_vector(const Matrix& space, const std::vector<Rational>& v);

Matrix transpose(const Matrix& m);
Matrix mul(const Matrix& a, const Matrix& b);
std::vector<Rational> mul_row(const std::vector<Rational>& v, const Matrix& m);

/* Inverse of a square matrix; throws std::invalid_argument when singular. */
Matrix inverse(const Matrix& m);

/* Pivot columns strictly increasing, pivot entries 1, zeros above and below
 * every pivot, zero rows (if any) last. Used by tests and validators.
 */
bool is_rref(const Matrix& m);

} // namespace superschur::linalg
