#include "z4/enumeration.hpp"

#include <algorithm>
#include <set>

namespace z4 {

std::vector<Mat> enumerate_A(int k1, int k2) {
    if (k1 < 0 || k2 < 0) throw std::invalid_argument("enumerate_A: negative shape");
    std::vector<Mat> out;
    if (k1 == 0 || k2 == 0) {
        out.push_back(Mat(k1, k2));
        return out;
    }
    const unsigned row_values = 1u << k2; // row packed with entry 0 as MSB
    std::vector<unsigned> rows(k1, 0);
    auto emit = [&] {
        Mat a(k1, k2);
        for (int r = 0; r < k1; ++r)
            for (int c = 0; c < k2; ++c)
                a.at(r, c) = static_cast<Scalar>((rows[r] >> (k2 - 1 - c)) & 1u);
        out.push_back(std::move(a));
    };
    // nondecreasing row sequences = multisets
    auto rec = [&](auto&& self, int pos, unsigned lo) -> void {
        if (pos == k1) {
            emit();
            return;
        }
        for (unsigned v = lo; v < row_values; ++v) {
            rows[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

bool in_B_family(const Mat& B) {
    for (int r = 0; r < B.rows; ++r) {
        bool has_unit = false, has_three = false;
        for (int c = 0; c < B.cols; ++c) {
            if (is_unit(B.at(r, c))) has_unit = true;
            if (B.at(r, c) == 3) has_three = true;
        }
        if (has_unit) return !has_three; // topmost unit row decides
    }
    return true; // (0,2)-matrix
}

// ---------------------------------------------------------------------------
// Column-wise candidate generation.
// ---------------------------------------------------------------------------
namespace {

constexpr int kNoRow = 1 << 20;

struct ColumnInfo {
    std::uint32_t key = 0; // 2 bits per row, row 0 most significant
    int min_unit_row = kNoRow;  // topmost B-row holding 1 or 3
    int min_three_row = kNoRow; // topmost B-row holding 3
};

struct CellShape {
    int n, k1, k2, ell;
    std::vector<Mat> As;
    std::vector<ColumnInfo> alphabet;     // nonzero stacked columns, ascending
    std::vector<int> suffix_min_unit_row; // over alphabet[i..]
};

std::vector<ColumnInfo> build_alphabet(int k1, int k2, bool include_zero) {
    const int rows = k1 + k2;
    std::vector<ColumnInfo> cols;
    const std::uint64_t total =
        (std::uint64_t(1) << (2 * k1)) << k2; // Z4 on top, {0,2} below
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        ColumnInfo ci;
        std::uint64_t rest = idx;
        for (int r = rows - 1; r >= 0; --r) {
            Scalar v;
            if (r >= k1) {
                v = static_cast<Scalar>((rest & 1) * 2);
                rest >>= 1;
            } else {
                v = static_cast<Scalar>(rest & 3);
                rest >>= 2;
            }
            ci.key |= std::uint32_t(v) << (2 * (rows - 1 - r));
            if (r < k1) {
                if (is_unit(v)) ci.min_unit_row = r;
                if (v == 3) ci.min_three_row = r;
            }
        }
        if (!include_zero && ci.key == 0) continue;
        cols.push_back(ci);
    }
    std::sort(cols.begin(), cols.end(),
              [](const ColumnInfo& a, const ColumnInfo& b) { return a.key < b.key; });
    return cols;
}

CellShape make_shape(int n, int k1, int k2) {
    if (n < 1 || n > kMaxLen || k1 < 0 || k2 < 0 || k1 + k2 < 1 || k1 + k2 > n)
        throw std::invalid_argument("enumerate_candidates: invalid (n,k1,k2)");
    CellShape s{n, k1, k2, n - k1 - k2, enumerate_A(k1, k2), {}, {}};
    if (s.ell > 0) {
        s.alphabet = build_alphabet(k1, k2, false);
        s.suffix_min_unit_row.assign(s.alphabet.size() + 1, kNoRow);
        for (int i = static_cast<int>(s.alphabet.size()) - 1; i >= 0; --i)
            s.suffix_min_unit_row[i] =
                std::min(s.suffix_min_unit_row[i + 1], s.alphabet[i].min_unit_row);
    }
    return s;
}

Scalar column_entry(const ColumnInfo& ci, int r, int rows) {
    return static_cast<Scalar>((ci.key >> (2 * (rows - 1 - r))) & 3);
}

struct ColumnGen {
    const CellShape& s;
    const std::function<void(const StandardGenerator&)>& fn;
    const Mat* A = nullptr;
    std::vector<int> chosen;

    ColumnGen(const CellShape& shape, const std::function<void(const StandardGenerator&)>& f)
        : s(shape), fn(f), chosen(shape.ell, 0) {}

    void emit() {
        const int rows = s.k1 + s.k2;
        Mat B(s.k1, s.ell), D(s.k2, s.ell);
        for (int c = 0; c < s.ell; ++c) {
            const ColumnInfo& ci = s.alphabet[chosen[c]];
            for (int r = 0; r < s.k1; ++r) B.at(r, c) = column_entry(ci, r, rows);
            for (int r = 0; r < s.k2; ++r)
                D.at(r, c) = static_cast<Scalar>(column_entry(ci, s.k1 + r, rows) / 2);
        }
        fn(StandardGenerator::make(s.n, s.k1, s.k2, *A, std::move(B), std::move(D)));
    }

    // fu/mt: topmost unit / topmost 3 row over the columns chosen so far.
    // The family condition at the end is mt == kNoRow or fu < mt; while a
    // violation (fu == mt) is pending it can still be cured by a later
    // column with a unit strictly above row mt.
    void rec(int pos, int lo, int fu, int mt) {
        if (pos == s.ell) {
            if (mt == kNoRow || fu < mt) emit();
            return;
        }
        for (int i = lo; i < static_cast<int>(s.alphabet.size()); ++i) {
            const ColumnInfo& ci = s.alphabet[i];
            const int nfu = std::min(fu, ci.min_unit_row);
            const int nmt = std::min(mt, ci.min_three_row);
            if (nmt != kNoRow && nfu == nmt) {
                // needs a future unit above row nmt
                if (pos + 1 == s.ell || s.suffix_min_unit_row[i] >= nmt) continue;
            }
            chosen[pos] = i;
            rec(pos + 1, i, nfu, nmt);
        }
    }
};

} // namespace

int candidate_task_count(int n, int k1, int k2) {
    const CellShape s = make_shape(n, k1, k2);
    if (s.ell == 0) return static_cast<int>(s.As.size());
    return static_cast<int>(s.As.size() * s.alphabet.size());
}

void for_each_candidate_in_task(int n, int k1, int k2, int task,
                                const std::function<void(const StandardGenerator&)>& fn) {
    const CellShape s = make_shape(n, k1, k2);
    if (s.ell == 0) {
        const Mat& A = s.As.at(task);
        fn(StandardGenerator::make(n, k1, k2, A, Mat(k1, 0), Mat(k2, 0)));
        return;
    }
    const int alpha = static_cast<int>(s.alphabet.size());
    ColumnGen g(s, fn);
    g.A = &s.As.at(task / alpha);
    const int first = task % alpha;
    const ColumnInfo& ci = s.alphabet[first];
    g.chosen[0] = first;
    g.rec(1, first, ci.min_unit_row, ci.min_three_row);
}

void for_each_candidate(int n, int k1, int k2,
                        const std::function<void(const StandardGenerator&)>& fn) {
    const int tasks = candidate_task_count(n, k1, k2);
    for (int t = 0; t < tasks; ++t) for_each_candidate_in_task(n, k1, k2, t, fn);
}

std::vector<StandardGenerator> enumerate_candidates(int n, int k1, int k2) {
    std::vector<StandardGenerator> out;
    for_each_candidate(n, k1, k2, [&](const StandardGenerator& g) { out.push_back(g); });
    return out;
}

// ---------------------------------------------------------------------------
// Filter chain counting.
// ---------------------------------------------------------------------------
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > ~std::uint64_t(0)) throw std::overflow_error("filter_report: count exceeds 64 bits");
    return static_cast<std::uint64_t>(p);
}

std::uint64_t ipow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

// |B-family| for k1 x ell matrices: all-(0,2) ones plus, for each choice of
// the topmost unit row i, (0,2)-rows above, a {0,1,2}-row with a 1 at i,
// and unrestricted rows below.
std::uint64_t b_family_count(int k1, int ell) {
    const std::uint64_t z = ipow(2, ell), u = ipow(3, ell) - z, f = ipow(4, ell);
    std::uint64_t total = ipow(z, k1);
    for (int i = 1; i <= k1; ++i)
        total += checked_mul(checked_mul(ipow(z, i - 1), u), ipow(f, k1 - i));
    return total;
}

} // namespace

CandidateFilterReport filter_report(int n, int k1, int k2) {
    const CellShape s = make_shape(n, k1, k2);
    const int ell = s.ell;
    CandidateFilterReport r;
    const std::uint64_t a_all = ipow(2, k1 * k2);
    const std::uint64_t a_sorted = binom((std::uint64_t(1) << k2) + k1 - 1, k1);
    const std::uint64_t bd_all = checked_mul(ipow(4, k1 * ell), ipow(2, k2 * ell));
    r.s_count = checked_mul(a_all, bd_all);
    r.t_count = checked_mul(a_sorted, bd_all);
    r.u_count = checked_mul(a_sorted, checked_mul(b_family_count(k1, ell), ipow(2, k2 * ell)));

    if (ell == 0) {
        r.v_count = a_sorted;
        r.candidate_count = a_sorted;
        return r;
    }
    // Sorted column sequences over the full alphabet (zero column allowed),
    // subject to the B-family condition; candidates additionally exclude the
    // zero column, which sorts first.
    const std::vector<ColumnInfo> full = build_alphabet(k1, k2, true);
    std::vector<int> suffix(full.size() + 1, kNoRow);
    for (int i = static_cast<int>(full.size()) - 1; i >= 0; --i)
        suffix[i] = std::min(suffix[i + 1], full[i].min_unit_row);
    std::uint64_t with_zero = 0, without_zero = 0;
    auto rec = [&](auto&& self, int pos, int lo, int fu, int mt, bool zero_used) -> void {
        if (pos == ell) {
            if (mt == kNoRow || fu < mt) {
                ++with_zero;
                if (!zero_used) ++without_zero;
            }
            return;
        }
        for (int i = lo; i < static_cast<int>(full.size()); ++i) {
            const int nfu = std::min(fu, full[i].min_unit_row);
            const int nmt = std::min(mt, full[i].min_three_row);
            if (nmt != kNoRow && nfu == nmt &&
                (pos + 1 == ell || suffix[i] >= nmt))
                continue;
            self(self, pos + 1, i, nfu, nmt, zero_used || full[i].key == 0);
        }
    };
    rec(rec, 0, 0, kNoRow, kNoRow, false);
    r.v_count = checked_mul(a_sorted, with_zero);
    r.candidate_count = checked_mul(a_sorted, without_zero);
    return r;
}

// ---------------------------------------------------------------------------
// Closed-form counts and their constructions.
// ---------------------------------------------------------------------------

std::optional<std::uint64_t> closed_form_count(int n, int k1, int k2) {
    if (n < 1 || k1 < 0 || k2 < 0 || k1 + k2 < 1 || k1 + k2 > n) return std::nullopt;
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    std::set<std::uint64_t> hits;
    if (k1 == n && k2 == 0) hits.insert(1);
    if (k1 == 0 && k2 == n) hits.insert(1);
    if (k1 == 0 && k2 == 1) hits.insert(1);
    if (k1 == n - 1 && k2 == 1) hits.insert(un);
    if (k1 == 1 && k2 == n - 1) hits.insert(un);
    if (k1 == 1 && k2 == 0) hits.insert(un);
    if (k1 == 0 && k2 == n - 1) hits.insert(un - 1);
    if (k1 == n - 1 && k2 == 0) hits.insert(un * (un + 1) / 2 - 1);
    if (hits.empty()) return std::nullopt;
    if (hits.size() > 1)
        throw std::logic_error("closed_form_count: overlapping formulas disagree");
    return *hits.begin();
}

void closed_form_self_check(int n_max) {
    for (int n = 1; n <= n_max; ++n)
        for (int k1 = 0; k1 <= n; ++k1)
            for (int k2 = 0; k1 + k2 <= n; ++k2)
                if (k1 + k2 >= 1) (void)closed_form_count(n, k1, k2);
}

namespace {

Mat column_mat(const Vec& entries) {
    Mat m(static_cast<int>(entries.size()), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), 0) = entries[i];
    return m;
}

Vec sorted_01(int len, int ones) {
    Vec v(len, 0);
    for (int i = len - ones; i < len; ++i) v[i] = 1;
    return v;
}

} // namespace

std::vector<StandardGenerator> closed_form_representatives(int n, int k1, int k2) {
    const auto count = closed_form_count(n, k1, k2);
    if (!count) throw std::invalid_argument("closed_form_representatives: no formula");
    std::vector<StandardGenerator> out;

    if (k1 == n && k2 == 0) { // Z4^n
        out.push_back(StandardGenerator::make(n, n, 0, Mat(), Mat(), Mat()));
    } else if (k1 == 0 && k2 == n) { // 2 Z4^n
        out.push_back(StandardGenerator::make(n, 0, n, Mat(), Mat(), Mat()));
    } else if (k1 == 0 && k2 == 1) { // (2 2 ... 2)
        Mat D(1, n - 1);
        for (int c = 0; c < n - 1; ++c) D.at(0, c) = 1;
        out.push_back(StandardGenerator::make(n, 0, 1, Mat(), Mat(1, 0), D));
    } else if (k1 == n - 1 && k2 == 1) { // [I a; 0 2], a with m ones
        for (int m = 0; m < n; ++m)
            out.push_back(StandardGenerator::make(n, n - 1, 1, column_mat(sorted_01(n - 1, m)),
                                                  Mat(n - 1, 0), Mat(1, 0)));
    } else if (k1 == 1 && k2 == n - 1) { // [1 a; 0 2I], a with m ones
        Mat A(1, n - 1);
        for (int m = 0; m < n; ++m) {
            const Vec a = sorted_01(n - 1, m);
            for (int c = 0; c < n - 1; ++c) A.at(0, c) = a[c];
            out.push_back(StandardGenerator::make(n, 1, n - 1, A, Mat(1, 0), Mat(n - 1, 0)));
        }
    } else if (k1 == 1 && k2 == 0) { // (1 1..1 2..2)
        for (int ones = 0; ones < n; ++ones) {
            Mat B(1, n - 1);
            for (int c = 0; c < n - 1; ++c) B.at(0, c) = c < ones ? 1 : 2;
            out.push_back(StandardGenerator::make(n, 1, 0, Mat(), B, Mat()));
        }
    } else if (k1 == 0 && k2 == n - 1) { // 2[I | a], a nonzero with m ones
        for (int m = 1; m < n; ++m)
            out.push_back(StandardGenerator::make(n, 0, n - 1, Mat(), Mat(0, 1),
                                                  column_mat(sorted_01(n - 1, m))));
    } else if (k1 == n - 1 && k2 == 0) {
        // [I | b] duals of the special_swe family: b = 3 * (first n-1 entries
        // of the special vector), i.e. (0^m0, 3^(m1-1), 2^(n-m0-m1)).
        for (int m0 = 0; m0 <= n - 2; ++m0) {
            for (int m1 = 1; m1 <= n - m0; ++m1) {
                Vec b(n - 1, 0);
                for (int i = m0; i < m0 + m1 - 1; ++i) b[i] = 3;
                for (int i = m0 + m1 - 1; i < n - 1; ++i) b[i] = 2;
                out.push_back(StandardGenerator::make(n, n - 1, 0, Mat(), column_mat(b), Mat()));
            }
        }
    }

    if (out.size() != *count)
        throw std::logic_error("closed_form_representatives: construction count mismatch");
    return out;
}

Vec special_swe_vector(int n, int m0, int m1) {
    if (n < 1 || m0 < 0 || m1 < 1 || m0 > n - 2 || m0 + m1 > n)
        throw std::invalid_argument("special_swe: parameters out of range");
    Vec v(n, 0);
    for (int i = m0; i < m0 + m1 - 1; ++i) v[i] = 1;
    for (int i = m0 + m1 - 1; i < n - 1; ++i) v[i] = 2;
    v[n - 1] = 1;
    return v;
}

WeightEnumerator special_swe(int n, int m0, int m1) {
    (void)special_swe_vector(n, m0, m1); // validate range
    WeightEnumerator we;
    we.kind = WeightKind::symmetrized;
    we.terms[{n, 0, 0}] += 1;
    we.terms[{m0, m1, n - m0 - m1}] += 2;
    we.terms[{n - m1, 0, m1}] += 1;
    return we;
}

} // namespace z4
