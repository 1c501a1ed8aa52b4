#pragma once

#include "superschur/algebra.hpp"
#include "superschur/homology.hpp"
#include "superschur/invariants.hpp"
#include "superschur/models.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superschur::verify {

enum class Verdict { Pass, Fail, Discrepancy, NotApplicable };

std::string verdict_name(Verdict v);

/* One executed claim. `data` holds the recomputed quantities feeding the
 * relation, in a fixed order; nothing on the PASS path is ever compared
 * against a hardcoded expected value — both sides are recomputed from the
 * algebra. DISCREPANCY is reserved for claims the computation contradicts
 * (the H(0,1) family); slack = rhs - lhs where the claim is an inequality.
 */
struct ClaimVerdict {
    std::string claim_id;
    std::string subject;
    std::vector<std::pair<std::string, std::string>> data;
    std::optional<Rational> slack;
    Verdict verdict = Verdict::Pass;
    std::string note;
};

/* splitmix64; self-contained so that seeded runs are reproducible across
 * platforms and standard-library implementations.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n);

  private:
    std::uint64_t state_;
};

/* Named algebra plus lazily computed, memoized invariants, so a suite run
 * evaluates each expensive quantity once per subject.
 */
class Subject {
  public:
    Subject(std::string name, SuperAlgebra alg)
        : name_(std::move(name)), alg_(std::move(alg)) {}

    const std::string& name() const { return name_; }
    const SuperAlgebra& algebra() const { return alg_; }
    const MultiplierResult& multiplier();
    const GradedSubspace& derived_space();
    const GradedSubspace& center_space();
    const NilpotencyResult& nilpotency();

  private:
    std::string name_;
    SuperAlgebra alg_;
    std::optional<MultiplierResult> mult_;
    std::optional<GradedSubspace> derived_;
    std::optional<GradedSubspace> center_;
    std::optional<NilpotencyResult> nilp_;
};

/* ½[(m+n)² + (n-m)] — the generic multiplier bound and the abelian multiplier
 * dimension.
 */
long long half_square_bound(const GradedDim& d);

ClaimVerdict check_derived_bound(Subject& s);
ClaimVerdict check_multiplier_bound(Subject& s);
ClaimVerdict check_abelian_equality(Subject& s);
ClaimVerdict check_quotient_inequality(Subject& s, const GradedSubspace& k,
                                       const std::string& k_desc);
/* Two sub-verdicts: the Künneth-style bound and the half-square bound, for a
 * central graded ideal K. The half-square side uses dim L (not dim L/K).
 */
std::vector<ClaimVerdict> check_central_ideal(Subject& s, const GradedSubspace& k,
                                              const std::string& k_desc);
ClaimVerdict check_sum_bound(Subject& s);
ClaimVerdict check_direct_sum(Subject& a, Subject& b, Subject& sum);
ClaimVerdict check_heisenberg_formula(std::size_t m, std::size_t n);
ClaimVerdict check_main_bound(Subject& s);

enum class EqualityFamily { H10, H01 };
ClaimVerdict check_equality_case(std::size_t m, std::size_t n, EqualityFamily family);

/* Cover postconditions (validate, stem condition, quotient identity, dim W
 * against the homology engine) plus the stem-extension dimension bound.
 */
std::vector<ClaimVerdict> check_stem_cover(std::size_t m, std::size_t n);
ClaimVerdict check_heisenberg_structure(std::size_t m, std::size_t n);

std::vector<Rational> default_pool();

/* Two-step nilpotent algebra on V ⊕ W with W central: brackets of V-basis
 * pairs are drawn from the pool into W coordinates of the matching parity.
 * Graded Jacobi holds by construction; validate is still run. Deterministic
 * per seed.
 */
SuperAlgebra random_nilpotent(std::uint64_t seed, GradedDim v_dim, GradedDim w_dim,
                              const std::vector<Rational>& pool);

struct SuiteSpec {
    std::uint64_t seed = 42;
    std::size_t random_count = 200;
};

/* Multiplier-dependent suite checks are skipped above this total dimension;
 * the large stem covers are exercised through their structural claims
 * instead. (Chain spaces grow cubically; the biggest in-cap corpus member
 * keeps the whole suite comfortably inside a desk-scale runtime.)
 */
inline constexpr std::size_t kMultiplierDimCap = 14;

/* The default corpus: abelians to total dim 6, H(m,n) for m+n <= 6, pairwise
 * direct sums of the small model set, stem covers for m+n <= 5, plus seeded
 * random two-step nilpotent algebras. Every applicable check runs on every
 * member; verdicts are sorted by claim id, then by construction order.
 */
std::vector<ClaimVerdict> run_suite(const SuiteSpec& spec);

struct CorpusEntry {
    std::string name;
    SuperAlgebra algebra;
    bool is_random = false;
};

/* The members of the default suite corpus, in suite order. */
std::vector<CorpusEntry> default_corpus(const SuiteSpec& spec);

/* The generic checks applicable to a single externally supplied algebra. */
std::vector<ClaimVerdict> checks_for_algebra(const SuperAlgebra& alg, const std::string& name);

struct SuiteSummary {
    std::size_t pass = 0, fail = 0, discrepancy = 0, not_applicable = 0;
};
SuiteSummary summarize(const std::vector<ClaimVerdict>& verdicts);

} // namespace superschur::verify
