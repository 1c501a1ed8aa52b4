#pragma once

#include "superschur/matrix.hpp"
#include "superschur/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace superschur {

using linalg::Matrix;

/* Graded dimension (m|n) of a superspace. */
struct GradedDim {
    std::size_t even = 0;
    std::size_t odd = 0;

    std::size_t total() const { return even + odd; }
    friend bool operator==(const GradedDim&, const GradedDim&) = default;
    std::string str() const {
        return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
    }
};

/* Canonical structure-constant key: i < j, or i == j with both indices odd.
 * The bracket table stores only these; [e_j, e_i] is derived by graded
 * skew-symmetry and [e_i, e_i] = 0 for even i is structural.
 */
struct PairKey {
    std::size_t i = 0, j = 0;
    friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

/* A finite-dimensional Lie superalgebra presented by rational structure
 * constants on a fixed homogeneous basis. Indices 0..even-1 are even,
 * even..even+odd-1 are odd. Values are immutable once built (set_bracket is
 * only used during construction) and safe for concurrent reads.
 *
 * The constructor and set_bracket enforce the structural invariants
 * (canonical pairs, grading support); the graded Jacobi identity is checked
 * by validate(), never assumed.
 */
class SuperAlgebra {
  public:
    explicit SuperAlgebra(GradedDim dim) : dim_(dim) {}

    const GradedDim& dim() const { return dim_; }
    std::size_t total() const { return dim_.total(); }
    int parity(std::size_t idx) const { return idx < dim_.even ? 0 : 1; }
    bool canonical_pair(std::size_t i, std::size_t j) const {
        return i < j || (i == j && parity(i) == 1);
    }

    /* coeffs has length total(); support must lie in parity
     * (parity(i)+parity(j)) mod 2. Throws std::invalid_argument on any
     * structural violation. An all-zero vector clears the entry.
     */
    void set_bracket(std::size_t i, std::size_t j, const std::vector<Rational>& coeffs);

    const std::map<PairKey, std::vector<Rational>>& table() const { return sc_; }

    /* [e_i, e_j] for arbitrary index order, via the graded swap rule. */
    std::vector<Rational> bracket_basis(std::size_t i, std::size_t j) const;

    /* Bilinear extension; u and v are full coordinate vectors. */
    std::vector<Rational> bracket(const std::vector<Rational>& u,
                                  const std::vector<Rational>& v) const;

    std::vector<Rational> basis_vector(std::size_t i) const {
        std::vector<Rational> v(total());
        v[i] = Rational(1);
        return v;
    }

  private:
    GradedDim dim_;
    std::map<PairKey, std::vector<Rational>> sc_;
};

struct JacobiViolation {
    std::array<std::size_t, 3> triple;
    std::vector<Rational> value; // nonzero graded-Jacobi sum, full coordinates
};

struct ValidationReport {
    bool ok = false;
    std::vector<std::string> structural;
    std::vector<JacobiViolation> jacobi;
};

/* Re-checks the structural invariants, then evaluates the graded Jacobi
 * expression
 *   (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]
 * exhaustively over canonical basis triples i <= j <= k (repeats only at odd
 * indices; repeated even indices vanish identically). Every violating triple
 * is reported with its value.
 */
ValidationReport validate(const SuperAlgebra& alg);

/* ℤ₂-graded subspace of a fixed ambient superspace, stored as a pair of RREF
 * basis matrices over the even and odd coordinates.
 */
struct GradedSubspace {
    GradedDim ambient;
    Matrix even_basis; // cols = ambient.even
    Matrix odd_basis;  // cols = ambient.odd

    GradedDim dim() const { return {even_basis.rows(), odd_basis.rows()}; }
};

GradedSubspace make_subspace(GradedDim ambient, const Matrix& even_rows, const Matrix& odd_rows);
GradedSubspace full_space(GradedDim dim);
GradedSubspace zero_space(GradedDim dim);
GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b);
bool contains(const GradedSubspace& outer, const GradedSubspace& inner);

/* Full-coordinate embedding of a parity-p coordinate row. */
std::vector<Rational> embed(const GradedDim& dim, int parity, const std::vector<Rational>& coords);
/* Restriction of a full coordinate vector to one parity block. */
std::vector<Rational> restrict_parity(const GradedDim& dim, int parity,
                                      const std::vector<Rational>& full);

/* Graded span of {[u,v] : u over I's homogeneous basis, v over J's}. */
GradedSubspace bracket_span(const SuperAlgebra& alg, const GradedSubspace& i_space,
                            const GradedSubspace& j_space);

/* Quotient by a graded ideal. The quotient basis is the deterministic
 * complement of the ideal: standard basis vectors taken lowest index first,
 * per parity, whenever they enlarge the span. projection_even/odd map an
 * ambient parity-block row vector to quotient coordinates (v -> v * P).
 */
struct Quotient {
    SuperAlgebra algebra;
    std::vector<std::size_t> complement_even; // ambient even coordinate indices
    std::vector<std::size_t> complement_odd;  // ambient odd coordinate indices
    Matrix projection_even;                   // ambient.even x q_even
    Matrix projection_odd;                    // ambient.odd x q_odd
};

/* Throws std::invalid_argument when the subspace is not a graded ideal. */
Quotient quotient(const SuperAlgebra& alg, const GradedSubspace& ideal);

/* Degree-0 change of basis: rows of p_even / p_odd are the new basis vectors
 * in old parity-block coordinates. Throws when either block is singular.
 */
SuperAlgebra change_basis(const SuperAlgebra& alg, const Matrix& p_even, const Matrix& p_odd);

} // namespace superschur
