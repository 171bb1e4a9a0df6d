// Exact arithmetic over Z4 = {0,1,2,3}: scalars, vectors, matrices, and the
// lexicographic order (0 < 1 < 2 < 3) used by every sorting filter in the
// classification pipeline. Also provides the packed-word codeword
// representation used on hot paths.
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace z4 {

using Scalar = std::uint8_t; // value in {0,1,2,3}

inline Scalar add(Scalar a, Scalar b) { return static_cast<Scalar>((a + b) & 3); }
inline Scalar sub(Scalar a, Scalar b) { return static_cast<Scalar>((a - b) & 3); }
inline Scalar mul(Scalar a, Scalar b) { return static_cast<Scalar>((a * b) & 3); }
inline Scalar neg(Scalar a) { return static_cast<Scalar>((4 - a) & 3); }
inline bool is_unit(Scalar a) { return a == 1 || a == 3; }

using Vec = std::vector<Scalar>;

// Total order on equal-length vectors: first differing entry decides,
// 0 < 1 < 2 < 3. Returns -1, 0 or 1.
int lex_compare(const Vec& a, const Vec& b);

Vec negate(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec scalar_mul(Scalar s, const Vec& v);
Scalar inner_product(const Vec& x, const Vec& y);

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a; // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    Scalar& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    Scalar at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    Vec row(int r) const;
    Vec col(int c) const;

    bool operator==(const Mat&) const = default;
};

Mat mat_from_rows(const std::vector<Vec>& rows);
Mat mat_mul(const Mat& m, const Mat& n);
Mat transpose(const Mat& m);
Mat identity(int n);

// True iff the rows (resp. the transposed columns) are nondecreasing
// under lex_compare.
bool is_row_sorted(const Mat& m);
bool is_col_sorted(const Mat& m);

// ---------------------------------------------------------------------------
// Packed codewords.
//
// A codeword of length n <= 16 is packed into a 64-bit word, one nibble per
// coordinate, with coordinate 0 in the MOST significant nibble. Unsigned
// comparison of packed words is then exactly lex_compare, so sorted word
// vectors double as canonical codeword-set representations.
// ---------------------------------------------------------------------------

using Word = std::uint64_t;

inline constexpr int kMaxLen = 16;
inline constexpr Word kMask03 = 0x3333'3333'3333'3333ull;
inline constexpr Word kMask4 = 0x4444'4444'4444'4444ull;
inline constexpr Word kMask1 = 0x1111'1111'1111'1111ull;
inline constexpr Word kMask2 = 0x2222'2222'2222'2222ull;

inline int word_shift(int i) { return 4 * (kMaxLen - 1 - i); }

inline Scalar word_get(Word w, int i) {
    return static_cast<Scalar>((w >> word_shift(i)) & 0xF);
}
inline Word word_set(Word w, int i, Scalar v) {
    const int s = word_shift(i);
    return (w & ~(Word(0xF) << s)) | (Word(v & 3) << s);
}

// Per-nibble sums never exceed 6, so plain integer addition cannot carry
// across nibble boundaries.
inline Word word_add(Word a, Word b) { return (a + b) & kMask03; }
inline Word word_neg(Word a) { return (kMask4 - a) & kMask03; }
inline Word word_dbl(Word a) { return (a << 1) & kMask03; }
inline Word word_scale(Scalar s, Word a) {
    switch (s & 3) {
        case 0: return 0;
        case 1: return a;
        case 2: return word_dbl(a);
        default: return word_neg(a);
    }
}

Word pack(const Vec& v);
Vec unpack(Word w, int n);

// Symbol counts used by every weight function: units = n1+n3, twos = n2.
inline int word_units(Word w) { return std::popcount(w & kMask1); }
inline int word_twos(Word w) {
    return std::popcount(w & kMask2) - std::popcount(w & (w >> 1) & kMask1);
}

namespace detail {
[[noreturn]] void throw_length_mismatch(const char* what);
} // namespace detail

} // namespace z4
