#include "z4/algebra.hpp"

namespace z4 {

namespace detail {
void throw_length_mismatch(const char* what) {
    throw std::invalid_argument(std::string(what) + ": length mismatch");
}
} // namespace detail

int lex_compare(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) detail::throw_length_mismatch("lex_compare");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Vec negate(const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = neg(v[i]);
    return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) detail::throw_length_mismatch("vec_add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i]);
    return r;
}

Vec scalar_mul(Scalar s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = mul(s, v[i]);
    return r;
}

Scalar inner_product(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) detail::throw_length_mismatch("inner_product");
    unsigned acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return static_cast<Scalar>(acc & 3);
}

Vec Mat::row(int r) const {
    Vec v(cols);
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
}

Vec Mat::col(int c) const {
    Vec v(rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

Mat mat_from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols)
            detail::throw_length_mismatch("mat_from_rows");
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c] & 3;
    }
    return m;
}

Mat mat_mul(const Mat& m, const Mat& n) {
    if (m.cols != n.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat r(m.rows, n.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int k = 0; k < m.cols; ++k) {
            const Scalar mik = m.at(i, k);
            if (mik == 0) continue;
            for (int j = 0; j < n.cols; ++j) {
                r.at(i, j) = add(r.at(i, j), mul(mik, n.at(k, j)));
            }
        }
    }
    return r;
}

Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool is_row_sorted(const Mat& m) {
    for (int r = 0; r + 1 < m.rows; ++r) {
        if (lex_compare(m.row(r), m.row(r + 1)) > 0) return false;
    }
    return true;
}

bool is_col_sorted(const Mat& m) {
    for (int c = 0; c + 1 < m.cols; ++c) {
        if (lex_compare(m.col(c), m.col(c + 1)) > 0) return false;
    }
    return true;
}

Word pack(const Vec& v) {
    if (v.size() > kMaxLen) throw std::invalid_argument("pack: length > 16");
    Word w = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        w |= Word(v[i] & 3) << word_shift(static_cast<int>(i));
    return w;
}

Vec unpack(Word w, int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = word_get(w, i);
    return v;
}

} // namespace z4
