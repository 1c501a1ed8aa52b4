#pragma once

#include "superschur/algebra.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace superschur {

/* Structural fingerprint of a validated superalgebra. split_indices is the
 * least (p, q) with C^p(L_even) = C^q(L_odd) = 0, present only when the
 * algebra is nilpotent. For an abelian algebra the convention is (1, 1):
 * C^0 is the part itself and indices are clamped to at least 1, since the
 * nonzero-predecessor reading degenerates there.
 */
struct StructureProfile {
    GradedDim dim;
    GradedDim derived_dim;
    GradedDim center_dim;
    bool nilpotent = false;
    std::optional<std::size_t> nilpotency_class;
    std::optional<std::pair<std::size_t, std::size_t>> split_indices;
};

/* Derived subalgebra L' = [L, L]. Caller must pass a validated algebra. */
GradedSubspace derived(const SuperAlgebra& alg);

/* Center Z(L) = {v : [v, e_k] = 0 for all k}, computed per parity as the
 * kernel of the stacked adjoint matrices. Always a graded ideal.
 */
GradedSubspace center(const SuperAlgebra& alg);

/* Whole lower central series C^k(L) = [L, C^{k-1}(L)] and the split
 * sequences C^k(L_even) = [L_even, C^{k-1}(L_even)],
 * C^k(L_odd) = [L_even, C^{k-1}(L_odd)], each listed from C^0 until the
 * first repeat (stabilization).
 */
struct LowerCentralSeries {
    std::vector<GradedSubspace> whole;
    std::vector<GradedSubspace> even_seq;
    std::vector<GradedSubspace> odd_seq;
};

LowerCentralSeries lower_central_series(const SuperAlgebra& alg);

struct NilpotencyResult {
    bool nilpotent = false;
    std::optional<std::size_t> nilpotency_class;                  // least k with C^k = 0
    std::optional<std::pair<std::size_t, std::size_t>> split_indices; // least (p,q), clamped to >= 1
};

/* Whole-series nilpotency; when nilpotent, also the split indices. The
 * equivalence between whole-series vanishing and both split sequences
 * vanishing is asserted (std::logic_error on disagreement).
 */
NilpotencyResult is_nilpotent(const SuperAlgebra& alg);

StructureProfile structure_profile(const SuperAlgebra& alg);

} // namespace superschur
