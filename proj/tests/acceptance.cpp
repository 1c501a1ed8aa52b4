/* Acceptance suite: exact end-to-end checks of the library's headline
 * results, one pass/fail line per criterion. All comparisons are exact
 * rational arithmetic; there is no tolerance anywhere.
 *
 * Usage: acceptance --cli <path-to-superschur-binary> [--only N]
 */
#include "superschur/homology.hpp"
#include "superschur/invariants.hpp"
#include "superschur/io.hpp"
#include "superschur/models.hpp"
#include "superschur/verifier.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

using namespace superschur;
using verify::EqualityFamily;
using verify::SuiteSpec;
using verify::Verdict;

namespace {

std::string g_cli_path;
std::vector<std::string> g_failures;

void expect(bool ok, const std::string& what) {
    if (!ok)
        g_failures.push_back(what);
}

long long heisenberg_formula(long long m, long long n) {
    return 2 * m * m - m - 1 + 2 * m * n + n * (n + 1) / 2;
}

/* ---- criterion 1: Heisenberg multiplier table -------------------------- */
void criterion_1() {
    for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t n = 0; n <= 3; ++n) {
            if (m + n < 2)
                continue;
            long long got = static_cast<long long>(
                multiplier_dim(models::heisenberg(m, n)).total);
            long long want = heisenberg_formula(static_cast<long long>(m),
                                                static_cast<long long>(n));
            expect(got == want, "H(" + std::to_string(m) + "," + std::to_string(n) + "): got " +
                                    std::to_string(got) + ", formula " + std::to_string(want));
        }
    expect(multiplier_dim(models::heisenberg(1, 0)).total == 2, "H(1,0) must be 2");
    verify::ClaimVerdict cv = verify::check_heisenberg_formula(0, 1);
    expect(cv.verdict == Verdict::Discrepancy, "H(0,1) must be DISCREPANCY, not " +
                                                   verify::verdict_name(cv.verdict));
    expect(cv.data.at(0).second == "0" && cv.data.at(1).second == "2",
           "H(0,1) must record computed 0 vs published 2");
}

/* ---- criterion 2: abelian equality, strictness elsewhere --------------- */
void criterion_2(const std::vector<verify::CorpusEntry>& corpus) {
    for (std::size_t m = 0; m <= 6; ++m)
        for (std::size_t n = 0; m + n <= 6; ++n) {
            long long got = static_cast<long long>(
                multiplier_dim(models::abelian(m, n)).total);
            long long want = verify::half_square_bound(GradedDim{m, n});
            expect(got == want, "A(" + std::to_string(m) + "|" + std::to_string(n) + "): got " +
                                    std::to_string(got) + ", want " + std::to_string(want));
        }
    for (const auto& entry : corpus) {
        if (entry.algebra.total() > verify::kMultiplierDimCap)
            continue;
        if (derived(entry.algebra).dim().total() == 0)
            continue;
        long long got = static_cast<long long>(multiplier_dim(entry.algebra).total);
        long long bound = verify::half_square_bound(entry.algebra.dim());
        expect(got < bound, entry.name + ": non-abelian but multiplier " + std::to_string(got) +
                                " not strictly below " + std::to_string(bound));
    }
}

/* ---- criterion 3: direct-sum formula ------------------------------------ */
void criterion_3() {
    std::vector<std::pair<std::string, SuperAlgebra>> parts;
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; a + b <= 3; ++b)
            parts.emplace_back("A(" + std::to_string(a) + "|" + std::to_string(b) + ")",
                               models::abelian(a, b));
    parts.emplace_back("H(1,0)", models::heisenberg(1, 0));
    parts.emplace_back("H(0,2)", models::heisenberg(0, 2));
    parts.emplace_back("H(1,1)", models::heisenberg(1, 1));
    parts.emplace_back("H(2,0)", models::heisenberg(2, 0));
    std::vector<long long> mult(parts.size()), abel(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        mult[i] = static_cast<long long>(multiplier_dim(parts[i].second).total);
        abel[i] = static_cast<long long>(parts[i].second.total() -
                                         derived(parts[i].second).dim().total());
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i; j < parts.size(); ++j) {
            SuperAlgebra sum = models::direct_sum(parts[i].second, parts[j].second);
            long long lhs = static_cast<long long>(multiplier_dim(sum).total);
            long long rhs = mult[i] + mult[j] + abel[i] * abel[j];
            expect(lhs == rhs, parts[i].first + " (+) " + parts[j].first + ": engine " +
                                   std::to_string(lhs) + " vs formula " + std::to_string(rhs));
        }
}

/* ---- criterion 4: stem covers ------------------------------------------ */
void criterion_4() {
    std::vector<std::pair<std::size_t, std::size_t>> params{{1, 0}};
    for (std::size_t t = 2; t <= 5; ++t)
        for (std::size_t m = 0; m <= t; ++m)
            params.emplace_back(m, t - m);
    for (auto [m, n] : params) {
        std::string name = "K(" + std::to_string(m) + "," + std::to_string(n) + ")";
        models::StemCover cover = models::stem_cover_heisenberg(m, n);
        expect(validate(cover.k).ok, name + ": validate failed");
        GradedSubspace meet = intersect(center(cover.k), derived(cover.k));
        expect(contains(meet, cover.w), name + ": W not inside Z(K) ∩ K'");
        SuperAlgebra h = models::heisenberg(m, n);
        Quotient q = quotient(cover.k, cover.w);
        expect(q.algebra.dim() == h.dim() && q.algebra.table() == h.table(),
               name + ": K/W does not reproduce H's structure constants");
        expect(cover.w.dim().total() == multiplier_dim(h).total,
               name + ": dim W differs from the multiplier of H");
    }
}

/* ---- criterion 5: main bound and its equality cases --------------------- */
void criterion_5(const std::vector<verify::CorpusEntry>& corpus) {
    std::size_t randoms_checked = 0;
    for (const auto& entry : corpus) {
        if (entry.algebra.total() > verify::kMultiplierDimCap)
            continue;
        verify::Subject s(entry.name, entry.algebra);
        verify::ClaimVerdict cv = verify::check_main_bound(s);
        expect(cv.verdict == Verdict::Pass || cv.verdict == Verdict::NotApplicable,
               entry.name + ": main bound " + verify::verdict_name(cv.verdict));
        if (entry.is_random && cv.verdict != Verdict::NotApplicable)
            ++randoms_checked;
    }
    // Top up with extra seeded draws until 200 random instances with
    // r + s >= 1 have been checked (an empty bracket table is abelian and
    // the bound does not apply there).
    verify::Rng dims_rng(0xC0FFEE);
    for (std::uint64_t i = 0; randoms_checked < 200 && i < 4000; ++i) {
        GradedDim v{1 + dims_rng.below(3), dims_rng.below(3)};
        GradedDim w{1 + dims_rng.below(2), dims_rng.below(2)};
        if (v.total() + w.total() > 7)
            continue;
        SuperAlgebra alg =
            verify::random_nilpotent(0xC0FFEE ^ (i << 8), v, w, verify::default_pool());
        if (alg.table().empty())
            continue;
        verify::Subject s("R+[" + std::to_string(i) + "]", std::move(alg));
        verify::ClaimVerdict cv = verify::check_main_bound(s);
        if (cv.verdict == Verdict::NotApplicable)
            continue;
        expect(cv.verdict == Verdict::Pass,
               s.name() + ": main bound " + verify::verdict_name(cv.verdict));
        ++randoms_checked;
    }
    expect(randoms_checked >= 200, "too few applicable random instances: " +
                                       std::to_string(randoms_checked));
    for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{
             {3, 0}, {4, 0}, {4, 1}, {5, 2}}) {
        verify::ClaimVerdict cv = verify::check_equality_case(m, n, EqualityFamily::H10);
        expect(cv.verdict == Verdict::Pass && cv.slack == Rational(0),
               "H10 equality at (" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
}

/* ---- criterion 6: differential contract --------------------------------- */
void criterion_6(const std::vector<verify::CorpusEntry>& corpus) {
    for (const auto& entry : corpus)
        expect(d2_after_d3_vanishes(entry.algebra), entry.name + ": d2∘d3 != 0");

    // 50 seeded degree-0 basis changes per small model algebra
    std::vector<std::pair<std::string, SuperAlgebra>> models_list;
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; a + b <= 3; ++b)
            models_list.emplace_back("A(" + std::to_string(a) + "|" + std::to_string(b) + ")",
                                     models::abelian(a, b));
    models_list.emplace_back("H(1,0)", models::heisenberg(1, 0));
    models_list.emplace_back("H(0,2)", models::heisenberg(0, 2));
    models_list.emplace_back("H(1,1)", models::heisenberg(1, 1));
    models_list.emplace_back("H(2,0)", models::heisenberg(2, 0));
    verify::Rng rng(20250101);
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
    for (const auto& [name, alg] : models_list) {
        MultiplierResult base = multiplier_dim(alg);
        for (int change = 0; change < 50; ++change) {
            SuperAlgebra moved = change_basis(alg, random_invertible(alg.dim().even),
                                              random_invertible(alg.dim().odd));
            MultiplierResult got = multiplier_dim(moved);
            expect(got.total == base.total && got.even == base.even && got.odd == base.odd,
                   name + ": multiplier moved under basis change #" + std::to_string(change));
        }
    }
}

/* ---- criterion 7: classical reduction ----------------------------------- */
void criterion_7() {
    expect(multiplier_dim(models::heisenberg(1, 0)).total == 2, "dim M(H(1)) != 2");
    expect(multiplier_dim(models::heisenberg(2, 0)).total == 5, "dim M(H(2)) != 5");
    expect(multiplier_dim(models::heisenberg(3, 0)).total == 14, "dim M(H(3)) != 14");
    for (std::size_t m = 1; m <= 3; ++m) {
        BoundaryMaps d2 = d2_matrix(models::heisenberg(m, 0));
        expect(d2.odd.rows() == 0, "odd chain block must be empty at n = 0");
    }
}

/* ---- criterion 8: section-3 inequality fuzz ------------------------------ */
void criterion_8(const std::vector<verify::CorpusEntry>& corpus) {
    std::size_t randoms = 0;
    for (const auto& entry : corpus) {
        if (!entry.is_random)
            continue;
        ++randoms;
        verify::Subject s(entry.name, entry.algebra);
        auto require_pass = [&](const verify::ClaimVerdict& cv) {
            expect(cv.verdict == Verdict::Pass,
                   entry.name + " " + cv.claim_id + ": " + verify::verdict_name(cv.verdict));
        };
        require_pass(verify::check_derived_bound(s));
        require_pass(verify::check_multiplier_bound(s));
        require_pass(verify::check_sum_bound(s));
        require_pass(verify::check_quotient_inequality(s, s.derived_space(), "K=L'"));
        if (s.center_space().dim().total() > 0) {
            GradedDim zdim = s.center_space().dim();
            Matrix even(0, s.algebra().dim().even), odd(0, s.algebra().dim().odd);
            if (zdim.even > 0)
                even.append_row(s.center_space().even_basis.row(0));
            else
                odd.append_row(s.center_space().odd_basis.row(0));
            GradedSubspace line = make_subspace(s.algebra().dim(), even, odd);
            for (const auto& cv : verify::check_central_ideal(s, line, "K=line"))
                require_pass(cv);
            for (const auto& cv : verify::check_central_ideal(s, s.center_space(), "K=Z(L)"))
                require_pass(cv);
        }
    }
    expect(randoms >= 200, "corpus carries fewer than 200 random instances");
}

/* ---- criterion 9: determinism of the verify command ---------------------- */
std::string capture(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return "<popen failed>";
    std::string out;
    char buf[8192];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    pclose(pipe);
    return out;
}

void criterion_9() {
    if (g_cli_path.empty()) {
        expect(false, "no --cli path given");
        return;
    }
    std::string cmd = g_cli_path + " verify --suite default --seed 42 2>&1";
    std::string first = capture(cmd);
    std::string second = capture(cmd);
    expect(!first.empty(), "verify produced no output");
    expect(first == second, "two verify runs differ");
    expect(first.find("\"fail\": 0") != std::string::npos, "suite reports failures");
}

struct Criterion {
    int number;
    std::string title;
    std::function<void()> run;
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc)
            g_cli_path = argv[++i];
        else if (arg == "--only" && i + 1 < argc)
            only = std::atoi(argv[++i]);
    }

    SuiteSpec spec{42, 200};
    std::vector<verify::CorpusEntry> corpus = verify::default_corpus(spec);

    std::vector<Criterion> criteria{
        {1, "Heisenberg multiplier table", criterion_1},
        {2, "abelian equality and strictness", [&] { criterion_2(corpus); }},
        {3, "direct-sum formula", criterion_3},
        {4, "stem covers", criterion_4},
        {5, "main bound and equality cases", [&] { criterion_5(corpus); }},
        {6, "differential contract", [&] { criterion_6(corpus); }},
        {7, "classical reduction", criterion_7},
        {8, "section-3 inequality fuzz", [&] { criterion_8(corpus); }},
        {9, "determinism", criterion_9},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        if (only != 0 && only != c.number)
            continue;
        g_failures.clear();
        try {
            c.run();
        } catch (const std::exception& e) {
            g_failures.push_back(std::string("exception: ") + e.what());
        }
        bool ok = g_failures.empty();
        std::cout << "criterion " << c.number << " (" << c.title << "): "
                  << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok) {
            ++failed;
            std::size_t shown = 0;
            for (const auto& f : g_failures) {
                std::cout << "    - " << f << "\n";
                if (++shown == 8) {
                    std::cout << "    - (" << g_failures.size() - shown << " more)\n";
                    break;
                }
            }
        }
    }
    if (failed == 0)
        std::cout << "ACCEPTANCE: all criteria PASS\n";
    else
        std::cout << "ACCEPTANCE: " << failed << " criterion(s) FAILED\n";
    return failed == 0 ? 0 : 1;
}
