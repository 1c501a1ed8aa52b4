#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superschur/homology.hpp"
#include "superschur/models.hpp"
#include "superschur/verifier.hpp"

#include <map>

using namespace superschur;

namespace {

/* Test-only oracle: the classical Chevalley-Eilenberg boundaries for a plain
 * Lie algebra (n = 0), written independently of the production path.
 * C2 basis: pairs i<j lexicographic; C3 basis: triples i<j<k lexicographic;
 * d3(i,j,k) = [i,j]∧k - [i,k]∧j + [j,k]∧i with e_a∧e_b = -e_b∧e_a.
 */
struct ClassicalComplex {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
    Matrix d2;
    Matrix d3;
};

ClassicalComplex classical_complex(const SuperAlgebra& alg) {
    REQUIRE(alg.dim().odd == 0);
    std::size_t n = alg.dim().even;
    ClassicalComplex cc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            cc.pair_index[{i, j}] = cc.pairs.size();
            cc.pairs.emplace_back(i, j);
        }
    cc.d2 = Matrix(cc.pairs.size(), n);
    for (std::size_t r = 0; r < cc.pairs.size(); ++r) {
        auto w = alg.bracket_basis(cc.pairs[r].first, cc.pairs[r].second);
        for (std::size_t t = 0; t < n; ++t)
            cc.d2(r, t) = w[t];
    }
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                triples.push_back({i, j, k});
    cc.d3 = Matrix(triples.size(), cc.pairs.size());
    for (std::size_t r = 0; r < triples.size(); ++r) {
        auto [i, j, k] = triples[r];
        auto add = [&](Rational sign, std::size_t a, std::size_t b, std::size_t other) {
            auto w = alg.bracket_basis(a, b);
            for (std::size_t t = 0; t < n; ++t) {
                if (w[t].is_zero() || t == other)
                    continue;
                Rational flip = t < other ? Rational(1) : Rational(-1);
                auto key = t < other ? std::make_pair(t, other) : std::make_pair(other, t);
                cc.d3(r, cc.pair_index.at(key)) += sign * w[t] * flip;
            }
        };
        add(Rational(1), i, j, k);
        add(Rational(-1), i, k, j);
        add(Rational(1), j, k, i);
    }
    return cc;
}

/* One odd generator y with [y,y] = z: this is H(0,1). */
SuperAlgebra one_odd_square() {
    return models::heisenberg(0, 1);
}

long long binom(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (long long t = 1; t <= k; ++t)
        r = r * (n - t + 1) / t;
    return r;
}

} // namespace

TEST_CASE("chain basis counts match the closed forms") {
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{0, 0}, {3, 0}, {0, 3}, {2, 2},
                        {5, 3}, {1, 4}}) {
        SuperAlgebra a = models::abelian(m, n);
        ChainBasis2 c2 = ChainBasis2::enumerate(a);
        ChainBasis3 c3 = ChainBasis3::enumerate(a);
        long long mm = static_cast<long long>(m), nn = static_cast<long long>(n);
        CHECK(static_cast<long long>(c2.even_gens.size()) == binom(mm, 2) + binom(nn + 1, 2));
        CHECK(static_cast<long long>(c2.odd_gens.size()) == mm * nn);
        CHECK(static_cast<long long>(c2.even_gens.size() + c2.odd_gens.size()) ==
              ((mm + nn) * (mm + nn) + nn - mm) / 2);
        CHECK(static_cast<long long>(c3.even_gens.size()) ==
              binom(mm, 3) + mm * binom(nn + 1, 2));
        CHECK(static_cast<long long>(c3.odd_gens.size()) ==
              binom(mm, 2) * nn + binom(nn + 2, 3));
    }
}

TEST_CASE("d2 examples") {
    SUBCASE("abelian: zero matrix, kernel is all of C2") {
        SuperAlgebra a = models::abelian(2, 1);
        BoundaryMaps d2 = d2_matrix(a);
        CHECK(linalg::rank(d2.even) == 0);
        CHECK(linalg::rank(d2.odd) == 0);
    }
    SUBCASE("H(1,0): rank 1") {
        BoundaryMaps d2 = d2_matrix(models::heisenberg(1, 0));
        CHECK(d2.even.rows() == 3);
        CHECK(linalg::rank(d2.even) == 1);
        CHECK(d2.even(0, 2) == Rational(1)); // (x1,x2) -> z
        CHECK(d2.even.is_zero_row(1));
        CHECK(d2.even.is_zero_row(2));
    }
    SUBCASE("H(0,2): rank 1, squares hit z") {
        BoundaryMaps d2 = d2_matrix(models::heisenberg(0, 2));
        CHECK(linalg::rank(d2.even) == 1);
        CHECK(linalg::rank(d2.odd) == 0);
    }
}

TEST_CASE("d3 examples") {
    SUBCASE("abelian: zero matrix") {
        BoundaryMaps d3 = d3_matrix(models::abelian(2, 2));
        CHECK(linalg::rank(d3.even) == 0);
        CHECK(linalg::rank(d3.odd) == 0);
    }
    SUBCASE("one odd generator with [y,y] = z: d3(y,y,y) = 3 z∧y, rank 1") {
        SuperAlgebra l = one_odd_square();
        ChainBasis2 c2 = ChainBasis2::enumerate(l);
        // odd block: the single mixed pair (z,y)
        REQUIRE(c2.odd_gens.size() == 1);
        auto terms = boundary3(l, c2, 1, 1, 1);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].first == 0);
        CHECK(terms[0].second == Rational(3));
        BoundaryMaps d3 = d3_matrix(l);
        CHECK(linalg::rank(d3.odd) == 1);
    }
    SUBCASE("H(1,0): d3 of (x1,x2,z) vanishes, rank 0") {
        BoundaryMaps d3 = d3_matrix(models::heisenberg(1, 0));
        CHECK(linalg::rank(d3.even) == 0);
        CHECK(linalg::rank(d3.odd) == 0);
    }
    SUBCASE("H(1,1): frozen hand computation") {
        // Even triples (x1,y,y) and (x2,y,y) map to z∧x1 = -(x1∧z) and
        // z∧x2 = -(x2∧z); (x1,x2,z) and (z,y,y) map to zero.
        SuperAlgebra h = models::heisenberg(1, 1);
        ChainBasis2 c2 = ChainBasis2::enumerate(h);
        std::size_t col_x1z = c2.even_index.at({0, 2});
        std::size_t col_x2z = c2.even_index.at({1, 2});
        auto t1 = boundary3(h, c2, 0, 3, 3);
        REQUIRE(t1.size() == 1);
        CHECK(t1[0] == std::pair<std::size_t, Rational>{col_x1z, Rational(-1)});
        auto t2 = boundary3(h, c2, 1, 3, 3);
        REQUIRE(t2.size() == 1);
        CHECK(t2[0] == std::pair<std::size_t, Rational>{col_x2z, Rational(-1)});
        CHECK(boundary3(h, c2, 0, 1, 2).empty());
        CHECK(boundary3(h, c2, 2, 3, 3).empty());
        // Odd triples: (x1,x2,y) -> z∧y; (y,y,y) -> 3 z∧y.
        std::size_t col_zy = c2.odd_index.at({2, 3});
        auto t3 = boundary3(h, c2, 0, 1, 3);
        REQUIRE(t3.size() == 1);
        CHECK(t3[0] == std::pair<std::size_t, Rational>{col_zy, Rational(1)});
        auto t4 = boundary3(h, c2, 3, 3, 3);
        REQUIRE(t4.size() == 1);
        CHECK(t4[0] == std::pair<std::size_t, Rational>{col_zy, Rational(3)});
    }
}

TEST_CASE("boundary3 is well-defined on the super exterior power") {
    // Evaluating the three-term formula on a permuted representative with the
    // Koszul sign of the permutation gives the same chain.
    std::vector<SuperAlgebra> corpus{models::heisenberg(1, 2),
                                     models::stem_cover_heisenberg(1, 1).k,
                                     verify::random_nilpotent(3, GradedDim{2, 2}, GradedDim{1, 1},
                                                              verify::default_pool())};
    for (const auto& alg : corpus) {
        ChainBasis2 c2 = ChainBasis2::enumerate(alg);
        ChainBasis3 c3 = ChainBasis3::enumerate(alg);
        auto check_swap = [&](std::size_t a, std::size_t b, std::size_t c) {
            // swap the first two arguments: d(a,b,c) = -(-1)^{|a||b|} d(b,a,c)
            auto base = boundary3(alg, c2, a, b, c);
            auto swapped = boundary3(alg, c2, b, a, c);
            Rational sign((alg.parity(a) && alg.parity(b)) ? 1 : -1);
            std::map<std::size_t, Rational> lhs, rhs;
            for (auto& [col, v] : base)
                lhs[col] = v;
            for (auto& [col, v] : swapped)
                rhs[col] = sign * v;
            CHECK(lhs == rhs);
        };
        for (const auto& [a, b, c] : c3.even_gens)
            check_swap(a, b, c);
        for (const auto& [a, b, c] : c3.odd_gens)
            check_swap(a, b, c);
    }
}

TEST_CASE("multiplier examples") {
    CHECK(multiplier_dim(models::abelian(2, 1)).total == 4);
    CHECK(multiplier_dim(models::heisenberg(1, 0)).total == 2);
    SUBCASE("H(1,1): total 3, split (1|2)") {
        MultiplierResult r = multiplier_dim(models::heisenberg(1, 1));
        CHECK(r.total == 3);
        CHECK(r.even == 1);
        CHECK(r.odd == 2);
        CHECK(r.total == r.dim_ker_d2 - r.rank_d3);
    }
    SUBCASE("H(0,2): ker d2 = 4, rank d3 = 2, total 2") {
        MultiplierResult r = multiplier_dim(models::heisenberg(0, 2));
        CHECK(r.dim_ker_d2 == 4);
        CHECK(r.rank_d3 == 2);
        CHECK(r.total == 2);
    }
    SUBCASE("H(0,1) computes 0, not the published 2") {
        MultiplierResult r = multiplier_dim(models::heisenberg(0, 1));
        CHECK(r.total == 0);
        CHECK(r.dim_ker_d2 == 1);
        CHECK(r.rank_d3 == 1);
    }
}

TEST_CASE("d2 ∘ d3 = 0 across a corpus") {
    std::vector<SuperAlgebra> corpus{models::abelian(3, 3),
                                     models::heisenberg(2, 2),
                                     models::heisenberg(0, 4),
                                     models::stem_cover_heisenberg(1, 0).k,
                                     models::stem_cover_heisenberg(2, 1).k,
                                     models::direct_sum(models::heisenberg(1, 1),
                                                        models::heisenberg(1, 0))};
    for (std::uint64_t seed = 100; seed < 120; ++seed)
        corpus.push_back(verify::random_nilpotent(seed, GradedDim{2, 2}, GradedDim{2, 2},
                                                  verify::default_pool()));
    for (const auto& alg : corpus) {
        CHECK(d2_after_d3_vanishes(alg));
        // same statement through the dense matrices on the small ones
        if (alg.total() <= 8) {
            BoundaryMaps d2 = d2_matrix(alg);
            BoundaryMaps d3 = d3_matrix(alg);
            CHECK(linalg::rank(linalg::mul(d3.even, d2.even)) == 0);
            CHECK(linalg::rank(linalg::mul(d3.odd, d2.odd)) == 0);
        }
    }
}

TEST_CASE("classical reduction at n = 0") {
    SUBCASE("complex coincides with the classical Chevalley-Eilenberg complex") {
        std::vector<SuperAlgebra> corpus{models::heisenberg(1, 0), models::heisenberg(3, 0),
                                         models::stem_cover_heisenberg(1, 0).k,
                                         verify::random_nilpotent(17, GradedDim{3, 0},
                                                                  GradedDim{2, 0},
                                                                  verify::default_pool())};
        for (const auto& alg : corpus) {
            ClassicalComplex cc = classical_complex(alg);
            BoundaryMaps d2 = d2_matrix(alg);
            BoundaryMaps d3 = d3_matrix(alg);
            CHECK(d2.even == cc.d2);
            CHECK(d2.odd.rows() == 0);
            CHECK(d3.even == cc.d3);
            CHECK(d3.odd.rows() == 0);
        }
    }
    SUBCASE("classical Heisenberg values 2, 5, 14") {
        CHECK(multiplier_dim(models::heisenberg(1, 0)).total == 2);
        CHECK(multiplier_dim(models::heisenberg(2, 0)).total == 5);
        CHECK(multiplier_dim(models::heisenberg(3, 0)).total == 14);
    }
}

TEST_CASE("multiplier is invariant under degree-0 basis changes") {
    verify::Rng rng(424242);
    auto random_invertible = [&](std::size_t n) {
        for (;;) {
            Matrix p(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    p(i, j) = Rational(static_cast<long long>(rng.below(5)) - 2);
            if (linalg::rank(p) == n)
                return p;
        }
    };
    std::vector<SuperAlgebra> corpus{models::heisenberg(1, 1), models::heisenberg(2, 0),
                                     models::heisenberg(0, 2),
                                     verify::random_nilpotent(8, GradedDim{2, 1}, GradedDim{1, 1},
                                                              verify::default_pool())};
    for (const auto& alg : corpus) {
        MultiplierResult base = multiplier_dim(alg);
        for (int trial = 0; trial < 8; ++trial) {
            SuperAlgebra moved = change_basis(alg, random_invertible(alg.dim().even),
                                              random_invertible(alg.dim().odd));
            CHECK(validate(moved).ok);
            MultiplierResult r = multiplier_dim(moved);
            CHECK(r.total == base.total);
            CHECK(r.even == base.even);
            CHECK(r.odd == base.odd);
        }
    }
}

TEST_CASE("abelian characterization: equality iff derived vanishes") {
    std::vector<SuperAlgebra> corpus{models::abelian(0, 0), models::abelian(4, 2),
                                     models::heisenberg(2, 1), models::heisenberg(0, 2),
                                     models::stem_cover_heisenberg(0, 2).k};
    for (std::uint64_t seed = 300; seed < 330; ++seed)
        corpus.push_back(verify::random_nilpotent(seed, GradedDim{2, 1}, GradedDim{1, 1},
                                                  verify::default_pool()));
    for (const auto& alg : corpus) {
        long long m = static_cast<long long>(alg.dim().even);
        long long n = static_cast<long long>(alg.dim().odd);
        long long bound = ((m + n) * (m + n) + n - m) / 2;
        bool attained = static_cast<long long>(multiplier_dim(alg).total) == bound;
        bool abelian = derived(alg).dim().total() == 0;
        CHECK(attained == abelian);
    }
}

TEST_CASE("direct-sum formula against the homology engine") {
    std::vector<SuperAlgebra> parts{models::abelian(1, 1), models::heisenberg(1, 0),
                                    models::heisenberg(1, 1), models::heisenberg(0, 2)};
    for (const auto& a : parts) {
        for (const auto& b : parts) {
            SuperAlgebra s = models::direct_sum(a, b);
            long long lhs = static_cast<long long>(multiplier_dim(s).total);
            long long ma = static_cast<long long>(multiplier_dim(a).total);
            long long mb = static_cast<long long>(multiplier_dim(b).total);
            long long aa = static_cast<long long>(a.total() - derived(a).dim().total());
            long long ab = static_cast<long long>(b.total() - derived(b).dim().total());
            CHECK(lhs == ma + mb + aa * ab);
        }
    }
    // H(1,1) ⊕ H(1,1): 3 + 3 + 3·3 = 15
    SuperAlgebra hh = models::direct_sum(models::heisenberg(1, 1), models::heisenberg(1, 1));
    CHECK(multiplier_dim(hh).total == 15);
}
