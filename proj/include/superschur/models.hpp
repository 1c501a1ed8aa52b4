#pragma once

#include "superschur/algebra.hpp"

#include <cstddef>

namespace superschur::models {

/* Abelian superalgebra of graded dimension (m|n): empty bracket table. */
SuperAlgebra abelian(std::size_t m, std::size_t n);

/* Special Heisenberg superalgebra H(m,n) with even center, dimension
 * (2m+1|n). Even basis x_1..x_2m, z (z last); odd basis y_1..y_n. Brackets
 * [x_i, x_{m+i}] = z for i = 1..m and [y_j, y_j] = z for j = 1..n.
 * Throws when m + n = 0.
 */
SuperAlgebra heisenberg(std::size_t m, std::size_t n);

/* Direct sum with cross brackets zero; basis reindexed even-first
 * (A even, B even, A odd, B odd).
 */
SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b);

/* Stem cover K of H(m,n) together with the central subspace W <= K with
 * K/W = H(m,n) and dim W = dim M(H(m,n)).
 *
 * For m >= 1, m+n >= 2 the even basis is x_1..x_2m, ζ, ŵ_2..ŵ_m,
 * v̂_1..v̂_n, w_{k,l} (1<=k<l<=2m, (k,l) not of the form (i,m+i)),
 * v_{k',l'} (1<=k'<l'<=n); the odd basis is y_1..y_n, γ_{k,j}. Brackets:
 * [x_1,x_{m+1}] = ζ; [x_i,x_{m+i}] = ζ + ŵ_i; [y_j,y_j] = ζ + v̂_j;
 * [x_k,x_l] = w_{k,l}; [y_{k'},y_{l'}] = v_{k',l'}; [x_k,y_j] = γ_{k,j};
 * everything brackets to zero with ζ and with W. For m = 0, n >= 2 the x/w/γ
 * generators are absent, ζ = [y_1,y_1] and only v̂_2..v̂_n survive. For
 * (m,n) = (1,0) the classical 5-dimensional cover is returned:
 * [x_1,x_2] = ζ, [x_1,ζ] = η_1, [x_2,ζ] = η_2, W = span{η_1, η_2}.
 *
 * (0,1) is rejected: the bracket [y,ζ] = η the construction would need fails
 * graded Jacobi at (y,y,y) in characteristic zero, so no such cover exists
 * and the computed multiplier of H(0,1) is 0.
 */
struct StemCover {
    SuperAlgebra k;
    GradedSubspace w;
};

StemCover stem_cover_heisenberg(std::size_t m, std::size_t n);

} // namespace superschur::models
