#include "z4/code.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace z4 {

Mat StandardGenerator::assemble() const {
    const int l = ell();
    Mat m(k1 + k2, n);
    for (int i = 0; i < k1; ++i) {
        m.at(i, i) = 1;
        for (int j = 0; j < k2; ++j) m.at(i, k1 + j) = A.at(i, j);
        for (int j = 0; j < l; ++j) m.at(i, k1 + k2 + j) = B.at(i, j);
    }
    for (int i = 0; i < k2; ++i) {
        m.at(k1 + i, k1 + i) = 2;
        for (int j = 0; j < l; ++j) m.at(k1 + i, k1 + k2 + j) = mul(2, D.at(i, j));
    }
    return m;
}

std::vector<Vec> StandardGenerator::generator_rows() const {
    const Mat m = assemble();
    std::vector<Vec> rows(m.rows);
    for (int r = 0; r < m.rows; ++r) rows[r] = m.row(r);
    return rows;
}

StandardGenerator StandardGenerator::make(int n, int k1, int k2, Mat A, Mat B, Mat D) {
    if (n < 1 || n > kMaxLen || k1 < 0 || k2 < 0 || k1 + k2 > n)
        throw std::invalid_argument("StandardGenerator: invalid (n,k1,k2)");
    const int l = n - k1 - k2;
    auto shape_ok = [](const Mat& m, int r, int c) {
        return (m.rows == r && m.cols == c) || (r * c == 0 && m.a.empty());
    };
    if (!shape_ok(A, k1, k2) || !shape_ok(B, k1, l) || !shape_ok(D, k2, l))
        throw std::invalid_argument("StandardGenerator: block shape mismatch");
    for (Scalar v : A.a)
        if (v > 1) throw std::invalid_argument("StandardGenerator: A not a (0,1)-matrix");
    for (Scalar v : D.a)
        if (v > 1) throw std::invalid_argument("StandardGenerator: D not a (0,1)-matrix");
    StandardGenerator g;
    g.n = n;
    g.k1 = k1;
    g.k2 = k2;
    g.A = std::move(A);
    g.B = std::move(B);
    g.D = std::move(D);
    if (g.A.rows * g.A.cols == 0) g.A = Mat(k1, k2);
    if (g.B.rows * g.B.cols == 0) g.B = Mat(k1, l);
    if (g.D.rows * g.D.cols == 0) g.D = Mat(k2, l);
    return g;
}

Z4Code span(const StandardGenerator& g) {
    Z4Code c;
    c.n = g.n;
    c.type = g.type();
    c.words.reserve(c.type.size());
    c.words.push_back(0);
    const Mat m = g.assemble();
    for (int r = 0; r < m.rows; ++r) {
        const Word row = pack(m.row(r));
        const int order = r < g.k1 ? 4 : 2;
        const std::size_t base = c.words.size();
        Word shift = 0;
        for (int s = 1; s < order; ++s) {
            shift = word_add(shift, row);
            for (std::size_t i = 0; i < base; ++i)
                c.words.push_back(word_add(c.words[i], shift));
        }
    }
    std::sort(c.words.begin(), c.words.end());
    return c;
}

Z4Code code_from_words(int n, std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    Z4Code c;
    c.n = n;
    c.words = std::move(words);
    if (!is_submodule(c)) throw std::invalid_argument("code_from_words: not a submodule");
    c.type = type_of_word_set(n, c.words);
    return c;
}

bool is_submodule(const Z4Code& c) {
    if (!std::binary_search(c.words.begin(), c.words.end(), Word(0))) return false;
    for (Word a : c.words) {
        if (!std::binary_search(c.words.begin(), c.words.end(), word_dbl(a))) return false;
        for (Word b : c.words) {
            if (!std::binary_search(c.words.begin(), c.words.end(), word_add(a, b)))
                return false;
        }
    }
    return true;
}

CodeType type_of_word_set(int n, const std::vector<Word>& words) {
    std::vector<Word> doubled;
    doubled.reserve(words.size());
    for (Word w : words) doubled.push_back(word_dbl(w));
    std::sort(doubled.begin(), doubled.end());
    doubled.erase(std::unique(doubled.begin(), doubled.end()), doubled.end());
    const int k1 = std::bit_width(doubled.size()) - 1;
    const int log_size = std::bit_width(words.size()) - 1;
    return {n, k1, log_size - 2 * k1};
}

// Shared row-reduction core. Phase 1 sweeps unit pivots left to right and
// clears their columns everywhere, after which every unreduced row is a
// (0,2)-row. Phase 2 picks 2-pivots among those and clears {2,3} entries
// above them, which is what puts the A-block into {0,1}.
namespace {

struct Echelon {
    std::vector<Vec> rows;      // reduced, zero rows dropped
    std::vector<int> unit_cols; // pivot columns, ascending
    std::vector<int> two_cols;
};

Echelon echelonize(std::vector<Vec> rows, int n) {
    int r = 0;
    const int m = static_cast<int>(rows.size());
    Echelon e;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (is_unit(rows[i][c])) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        rows[r] = scalar_mul(rows[r][c], rows[r]); // 1 and 3 are self-inverse
        for (int i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Scalar f = rows[i][c];
            for (int j = 0; j < n; ++j) rows[i][j] = sub(rows[i][j], mul(f, rows[r][j]));
        }
        e.unit_cols.push_back(c);
        ++r;
    }
    const int k1 = r;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (rows[i][c] == 2) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            const bool hit = i < k1 ? rows[i][c] >= 2 : rows[i][c] == 2;
            if (!hit) continue;
            for (int j = 0; j < n; ++j) rows[i][j] = sub(rows[i][j], rows[r][j]);
        }
        e.two_cols.push_back(c);
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

} // namespace

CodeType compute_type(const std::vector<Vec>& rows) {
    if (rows.empty()) throw std::invalid_argument("compute_type: empty row list");
    const int n = static_cast<int>(rows[0].size());
    for (const Vec& v : rows)
        if (static_cast<int>(v.size()) != n) detail::throw_length_mismatch("compute_type");
    const Echelon e = echelonize(rows, n);
    return {n, static_cast<int>(e.unit_cols.size()), static_cast<int>(e.two_cols.size())};
}

Standardized standardize(const std::vector<Vec>& rows, int n) {
    for (const Vec& v : rows)
        if (static_cast<int>(v.size()) != n) detail::throw_length_mismatch("standardize");
    const Echelon e = echelonize(rows, n);
    const int k1 = static_cast<int>(e.unit_cols.size());
    const int k2 = static_cast<int>(e.two_cols.size());

    std::vector<int> col_from;
    col_from.reserve(n);
    col_from.insert(col_from.end(), e.unit_cols.begin(), e.unit_cols.end());
    col_from.insert(col_from.end(), e.two_cols.begin(), e.two_cols.end());
    std::vector<bool> used(n, false);
    for (int c : col_from) used[c] = true;
    for (int c = 0; c < n; ++c)
        if (!used[c]) col_from.push_back(c);

    const int l = n - k1 - k2;
    Mat A(k1, k2), B(k1, l), D(k2, l);
    for (int i = 0; i < k1; ++i) {
        for (int j = 0; j < k2; ++j) A.at(i, j) = e.rows[i][col_from[k1 + j]];
        for (int j = 0; j < l; ++j) B.at(i, j) = e.rows[i][col_from[k1 + k2 + j]];
    }
    for (int i = 0; i < k2; ++i)
        for (int j = 0; j < l; ++j)
            D.at(i, j) = static_cast<Scalar>(e.rows[k1 + i][col_from[k1 + k2 + j]] / 2);

    Standardized s;
    s.gen = StandardGenerator::make(n, k1, k2, std::move(A), std::move(B), std::move(D));
    s.col_from = std::move(col_from);
    return s;
}

DualResult dual(const StandardGenerator& g) {
    const int l = g.ell();
    // Blocks on the reordered coordinates (old ell-block, old k2-block,
    // old k1-block): [I_l, D^T, -B^T - D^T A^T; 0, 2I_k2, 2A^T].
    const Mat dt = transpose(g.D);
    const Mat at = transpose(g.A);
    Mat x = mat_mul(dt, at); // l x k1
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < g.k1; ++j) x.at(i, j) = neg(add(g.B.at(j, i), x.at(i, j)));

    DualResult r;
    r.gen = StandardGenerator::make(g.n, l, g.k2, dt, std::move(x), at);
    r.col_from.reserve(g.n);
    for (int c = g.k1 + g.k2; c < g.n; ++c) r.col_from.push_back(c);
    for (int c = g.k1; c < g.k1 + g.k2; ++c) r.col_from.push_back(c);
    for (int c = 0; c < g.k1; ++c) r.col_from.push_back(c);
    return r;
}

Z4Code permute_coords(const Z4Code& c, const std::vector<int>& from) {
    if (static_cast<int>(from.size()) != c.n)
        detail::throw_length_mismatch("permute_coords");
    Z4Code out;
    out.n = c.n;
    out.type = c.type;
    out.words.reserve(c.words.size());
    for (Word w : c.words) {
        Word v = 0;
        for (int j = 0; j < c.n; ++j) v = word_set(v, j, word_get(w, from[j]));
        out.words.push_back(v);
    }
    std::sort(out.words.begin(), out.words.end());
    return out;
}

Z4Code dual_code(const StandardGenerator& g) {
    const DualResult d = dual(g);
    // span(d.gen) lives on the reordered coordinates; invert col_from to map
    // each word back onto the original ones.
    std::vector<int> inv(g.n);
    for (int j = 0; j < g.n; ++j) inv[d.col_from[j]] = j;
    Z4Code c = permute_coords(span(d.gen), inv);
    c.type = d.gen.type();
    return c;
}

BinaryCode residue(const StandardGenerator& g) {
    BinaryCode b;
    b.n = g.n;
    const int l = g.ell();
    for (int i = 0; i < g.k1; ++i) {
        std::uint32_t row = std::uint32_t(1) << i;
        for (int j = 0; j < g.k2; ++j)
            if (g.A.at(i, j) & 1) row |= std::uint32_t(1) << (g.k1 + j);
        for (int j = 0; j < l; ++j)
            if (g.B.at(i, j) & 1) row |= std::uint32_t(1) << (g.k1 + g.k2 + j);
        b.gen_rows.push_back(row);
    }
    b.words.resize(std::size_t(1) << g.k1, 0);
    for (std::size_t m = 1; m < b.words.size(); ++m) {
        const int bit = std::countr_zero(m);
        b.words[m] = b.words[m ^ (std::size_t(1) << bit)] ^ b.gen_rows[bit];
    }
    std::sort(b.words.begin(), b.words.end());
    b.words.erase(std::unique(b.words.begin(), b.words.end()), b.words.end());
    return b;
}

BinaryCode residue(const Z4Code& c) {
    BinaryCode b;
    b.n = c.n;
    b.words.reserve(c.words.size());
    for (Word w : c.words) {
        std::uint32_t m = 0;
        for (int i = 0; i < c.n; ++i)
            if (word_get(w, i) & 1) m |= std::uint32_t(1) << i;
        b.words.push_back(m);
    }
    std::sort(b.words.begin(), b.words.end());
    b.words.erase(std::unique(b.words.begin(), b.words.end()), b.words.end());
    return b;
}

Z4Code trivial_extension(const Z4Code& c) {
    if (c.n + 1 > kMaxLen) throw std::invalid_argument("trivial_extension: length > 16");
    Z4Code out = c; // appended coordinate is the next nibble, already zero
    out.n = c.n + 1;
    out.type.n = out.n;
    return out;
}

bool has_zero_coordinate(const Z4Code& c) {
    Word any = 0;
    for (Word w : c.words) any |= w;
    for (int i = 0; i < c.n; ++i)
        if (word_get(any, i) == 0) return true;
    return false;
}

ParsedGenerator read_generator(std::istream& in) {
    std::string first;
    if (!std::getline(in, first)) throw std::runtime_error("generator file: empty input");
    std::istringstream head(first);
    std::string tok;
    head >> tok;

    auto read_rows = [&](int n, int count) {
        std::vector<Vec> rows;
        for (int r = 0; r < count; ++r) {
            Vec v(n);
            for (int c = 0; c < n; ++c) {
                int x;
                if (!(in >> x) || x < 0 || x > 3)
                    throw std::runtime_error("generator file: bad entry");
                v[c] = static_cast<Scalar>(x);
            }
            rows.push_back(std::move(v));
        }
        return rows;
    };

    ParsedGenerator p;
    if (tok == "raw") {
        int n, m;
        if (!(head >> n >> m) || n < 1 || n > kMaxLen || m < 0)
            throw std::runtime_error("generator file: bad raw header");
        const Standardized s = standardize(read_rows(n, m), n);
        p.gen = s.gen;
        p.col_from = s.col_from;
        p.was_raw = true;
        return p;
    }

    int n, k1, k2;
    std::istringstream head2(first);
    if (!(head2 >> n >> k1 >> k2) || n < 1 || n > kMaxLen || k1 < 0 || k2 < 0 ||
        k1 + k2 > n)
        throw std::runtime_error("generator file: bad header");
    const std::vector<Vec> rows = read_rows(n, k1 + k2);
    const int l = n - k1 - k2;
    Mat A(k1, k2), B(k1, l), D(k2, l);
    for (int i = 0; i < k1; ++i) {
        for (int c = 0; c < k1; ++c)
            if (rows[i][c] != (c == i ? 1 : 0))
                throw std::runtime_error("generator file: first block is not I_k1");
        for (int j = 0; j < k2; ++j) {
            if (rows[i][k1 + j] > 1)
                throw std::runtime_error("generator file: A entry not in {0,1}");
            A.at(i, j) = rows[i][k1 + j];
        }
        for (int j = 0; j < l; ++j) B.at(i, j) = rows[i][k1 + k2 + j];
    }
    for (int i = 0; i < k2; ++i) {
        for (int c = 0; c < k1; ++c)
            if (rows[k1 + i][c] != 0)
                throw std::runtime_error("generator file: nonzero under I_k1");
        for (int j = 0; j < k2; ++j)
            if (rows[k1 + i][k1 + j] != (j == i ? 2 : 0))
                throw std::runtime_error("generator file: middle block is not 2I_k2");
        for (int j = 0; j < l; ++j) {
            const Scalar v = rows[k1 + i][k1 + k2 + j];
            if (v != 0 && v != 2)
                throw std::runtime_error("generator file: 2D entry not in {0,2}");
            D.at(i, j) = static_cast<Scalar>(v / 2);
        }
    }
    p.gen = StandardGenerator::make(n, k1, k2, std::move(A), std::move(B), std::move(D));
    p.col_from.resize(n);
    std::iota(p.col_from.begin(), p.col_from.end(), 0);
    return p;
}

ParsedGenerator read_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open generator file: " + path);
    return read_generator(in);
}

void write_generator(std::ostream& out, const StandardGenerator& g) {
    out << g.n << ' ' << g.k1 << ' ' << g.k2 << '\n';
    const Mat m = g.assemble();
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out << ' ';
            out << int(m.at(r, c));
        }
        out << '\n';
    }
}

std::string to_text(const StandardGenerator& g) {
    std::ostringstream os;
    write_generator(os, g);
    return os.str();
}

} // namespace z4
