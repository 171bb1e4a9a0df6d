// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Criterion 8 (lengths 6 and 7) is connectivity to the
// extended runs and is skipped unless Z4CLASS_EXTENDED is set (1 = length 6,
// 7 = lengths 6 and 7).
#include "z4/classify.hpp"
#include "z4/golden.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

using namespace z4;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const char* text, double seconds) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", criterion, text,
                seconds);
    if (!ok) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::vector<ClassificationTable> classify_up_to(int n_max, const ClassifyOptions& opt) {
    std::vector<ClassificationTable> tables;
    PriorCounts prior;
    for (int n = 1; n <= n_max; ++n) {
        tables.push_back(classify_length(n, n == 1 ? nullptr : &prior, opt));
        prior = tables.back().counts();
    }
    return tables;
}

bool table_matches_golden(const ClassificationTable& t, bool check_cells) {
    bool ok = t.n_prime_total == golden::kNPrimeTotals[t.n] &&
              t.n_total == golden::kNTotals[t.n];
    if (!check_cells) return ok;
    std::size_t seen = 0;
    for (const auto& [key, cell] : t.cells) {
        const auto g = golden::n_prime(t.n, key.first, key.second);
        if (!g || cell.n_prime != *g) {
            std::printf("  cell mismatch: N'(%d,%d,%d) = %llu, expected %llu\n", t.n,
                        key.first, key.second,
                        static_cast<unsigned long long>(cell.n_prime),
                        g ? static_cast<unsigned long long>(*g) : 0ull);
            ok = false;
        }
        ++seen;
    }
    for (const auto& c : golden::kCells)
        if (c.n == t.n) --seen;
    if (seen != 0) {
        std::printf("  cell count differs from the reference table\n");
        ok = false;
    }
    return ok;
}

} // namespace

int main() {
    ClassifyOptions opt;
    opt.threads = resolve_threads(0);
    std::printf("workers: %d\n", opt.threads);

    // Criteria 1-3 share the length-1..5 classification chain.
    Timer t_chain;
    const std::vector<ClassificationTable> tables = classify_up_to(5, opt);
    const double chain_seconds = t_chain.seconds();

    {
        bool ok = true;
        for (const auto& t : tables) ok &= table_matches_golden(t, true);
        report(1, ok, "every N'(n,k1,k2) for n <= 5 reproduced exactly", chain_seconds);
    }
    {
        bool ok = true;
        for (const auto& t : tables) {
            ok &= t.n_prime_total == golden::kNPrimeTotals[t.n];
            ok &= t.n_total == golden::kNTotals[t.n];
        }
        report(2, ok, "totals N'(1..5) = 2,7,26,110,537 and N(1..5) = 2,9,35,145,682",
               0.0);
    }
    {
        Timer tm;
        bool ok = true;
        for (const auto& t : tables) {
            const DualityReport r = duality_check(t);
            if (!r.ok)
                for (const auto& v : r.violations) std::printf("  %s\n", v.c_str());
            ok &= r.ok;
        }
        report(3, ok, "duality identity N(n,k1,k2) = N(n,n-k1-k2,k2) for all cells, n <= 5",
               tm.seconds());
    }
    {
        Timer tm;
        bool ok = true;
        closed_form_self_check(7);
        for (int n = 1; n <= 6; ++n) {
            for (int k1 = 0; k1 <= n; ++k1) {
                for (int k2 = 0; k1 + k2 <= n; ++k2) {
                    if (k1 + k2 < 1) continue;
                    const auto formula = closed_form_count(n, k1, k2);
                    if (!formula) continue;
                    // exhaustive run (classify_cell itself cross-checks, but
                    // compare explicitly and against the reference tables)
                    const ClassificationCell cell = classify_cell(n, k1, k2, opt);
                    const auto g = golden::n_prime(n, k1, k2);
                    if (cell.n_prime != *formula || !g || *g != *formula) {
                        std::printf("  (%d,%d,%d): exhaustive %llu, formula %llu\n", n, k1,
                                    k2, static_cast<unsigned long long>(cell.n_prime),
                                    static_cast<unsigned long long>(*formula));
                        ok = false;
                    }
                }
            }
        }
        report(4, ok, "exhaustive counts equal all closed-form values, n <= 6",
               tm.seconds());
    }
    {
        Timer tm;
        bool ok = true;
        std::mt19937 rng(12345);
        for (int n = 2; n <= 5; ++n) {
            int positives = 0;
            for (int pair = 0; pair < 100; ++pair) {
                const Z4Code a = span(oracle::random_generator(n, rng));
                const Z4Code b =
                    pair % 2 == 0 ? apply_monomial(a, oracle::random_monomial(n, rng))
                                  : span(oracle::random_generator(n, rng));
                const auto fast = are_equivalent(a, b);
                const auto brute = oracle::brute_force_equivalent(a, b);
                if (fast.has_value() != brute.has_value()) {
                    std::printf("  disagreement at n=%d pair %d\n", n, pair);
                    ok = false;
                }
                if (fast) {
                    ++positives;
                    if (!(apply_monomial(b, *fast) == a)) {
                        std::printf("  unsound witness at n=%d pair %d\n", n, pair);
                        ok = false;
                    }
                }
            }
            if (positives < 50) {
                std::printf("  too few equivalent pairs at n=%d\n", n);
                ok = false;
            }
        }
        report(5, ok,
               "pruned search matches brute force over all n!*2^n monomials, "
               "100 pairs each for n in {2,3,4,5}",
               tm.seconds());
    }
    {
        Timer tm;
        bool ok = true;
        for (int n = 1; n <= 4; ++n) {
            for (int k1 = 0; k1 <= n; ++k1) {
                for (int k2 = 0; k1 + k2 <= n; ++k2) {
                    if (k1 + k2 < 1) continue;
                    // reduce the UNfiltered standard-form enumeration
                    std::vector<Z4Code> codes;
                    for (const StandardGenerator& g :
                         oracle::all_standard_generators(n, k1, k2)) {
                        Z4Code c = span(g);
                        if (!has_zero_coordinate(c)) codes.push_back(std::move(c));
                    }
                    std::sort(codes.begin(), codes.end());
                    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
                    const std::size_t unfiltered =
                        codes.empty() ? 0 : partition_classes(codes).size();
                    const std::uint64_t pruned = classify_cell(n, k1, k2, opt).n_prime;
                    if (unfiltered != pruned) {
                        std::printf("  (%d,%d,%d): unfiltered %zu vs pruned %llu\n", n, k1,
                                    k2, unfiltered,
                                    static_cast<unsigned long long>(pruned));
                        ok = false;
                    }
                }
            }
        }
        report(6, ok, "unfiltered-S reduction equals the pruned enumeration, n <= 4",
               tm.seconds());
    }
    {
        Timer tm;
        bool ok = true;
        // duality involution and |C| * |dual| = 4^n on all classified codes
        for (const auto& t : tables) {
            for (const auto& [key, cell] : t.cells) {
                for (const StandardGenerator& g : cell.representatives) {
                    const Z4Code c = span(g);
                    const Z4Code cd = dual_code(g);
                    if (c.size() * cd.size() != (std::uint64_t(1) << (2 * t.n))) ok = false;
                    const DualResult d1 = dual(g);
                    const DualResult d2 = dual(d1.gen);
                    Z4Code dd = span(d2.gen);
                    std::vector<int> inv(t.n);
                    for (int j = 0; j < t.n; ++j) inv[d2.col_from[j]] = j;
                    dd = permute_coords(dd, inv);
                    for (int j = 0; j < t.n; ++j) inv[d1.col_from[j]] = j;
                    dd = permute_coords(dd, inv);
                    if (!(dd.words == c.words)) ok = false;
                }
            }
        }
        if (!ok) std::printf("  duality involution / cardinality failure\n");
        // enumerator invariance under 1000 random monomial applications
        std::mt19937 rng(999);
        std::vector<Z4Code> pool;
        for (const auto& t : tables)
            for (const auto& [key, cell] : t.cells)
                for (const StandardGenerator& g : cell.representatives)
                    pool.push_back(span(g));
        for (int i = 0; i < 1000; ++i) {
            const Z4Code& c = pool[rng() % pool.size()];
            const Z4Code img = apply_monomial(c, oracle::random_monomial(c.n, rng));
            for (WeightKind k :
                 {WeightKind::hamming, WeightKind::lee, WeightKind::symmetrized}) {
                if (!(enumerator(c, k) == enumerator(img, k))) {
                    std::printf("  enumerator changed under a monomial\n");
                    ok = false;
                }
            }
        }
        // special swe family vs brute-force spans, n <= 7
        for (int n = 1; n <= 7; ++n) {
            for (int m0 = 0; m0 <= n - 2; ++m0) {
                for (int m1 = 1; m1 <= n - m0; ++m1) {
                    const Vec v = special_swe_vector(n, m0, m1);
                    const Z4Code c = code_from_words(n, oracle::closure_span({v}));
                    if (!(enumerator(c, WeightKind::symmetrized) ==
                          special_swe(n, m0, m1))) {
                        std::printf("  special swe mismatch at (%d,%d,%d)\n", n, m0, m1);
                        ok = false;
                    }
                }
            }
        }
        report(7, ok,
               "duality involution, |C|*|dual| = 4^n, enumerator invariance x1000, "
               "special swe family n <= 7",
               tm.seconds());
    }
    {
        const char* ext = std::getenv("Z4CLASS_EXTENDED");
        if (!ext || ext[0] == '\0' || ext[0] == '0') {
            std::printf("[SKIP] criterion 8: extended lengths (set Z4CLASS_EXTENDED=1 "
                        "for length 6, =7 for lengths 6 and 7)\n");
        } else {
            Timer tm;
            bool ok = true;
            PriorCounts prior = tables.back().counts();
            const int n_max = ext[0] == '7' ? 7 : 6;
            for (int n = 6; n <= n_max; ++n) {
                const ClassificationTable t = classify_length(n, &prior, opt);
                ok &= table_matches_golden(t, true);
                ok &= duality_check(t).ok;
                prior = t.counts();
            }
            report(8, ok, n_max == 7 ? "lengths 6 and 7 reproduced" : "length 6 reproduced",
                   tm.seconds());
        }
    }

    std::printf("%s: %d criterion failure(s)\n", g_failures ? "FAILURE" : "SUCCESS",
                g_failures);
    return g_failures;
}
