// The Z4-code abstraction: standard-form generator matrices
// [I_k1 A B; 0 2I_k2 2D], spans as canonical sorted codeword sets, types,
// duals, binary residue codes and trivial extensions.
#pragma once

#include "z4/algebra.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace z4 {

struct CodeType {
    int n = 0;
    int k1 = 0;
    int k2 = 0;

    std::uint64_t size() const { return (std::uint64_t(1) << (2 * k1)) << k2; }
    bool operator==(const CodeType&) const = default;
};

// Block triple of the standard generator matrix. A and D are (0,1)-matrices,
// B is an arbitrary Z4-matrix of shape k1 x (n-k1-k2).
struct StandardGenerator {
    int n = 0;
    int k1 = 0;
    int k2 = 0;
    Mat A; // k1 x k2
    Mat B; // k1 x ell
    Mat D; // k2 x ell

    int ell() const { return n - k1 - k2; }
    CodeType type() const { return {n, k1, k2}; }

    Mat assemble() const;                  // full (k1+k2) x n matrix
    std::vector<Vec> generator_rows() const;

    // Validates shapes and the {0,1} constraint on A and D.
    static StandardGenerator make(int n, int k1, int k2, Mat A, Mat B, Mat D);
};

// A code as its full codeword set: `words` is sorted ascending and unique,
// which makes it the canonical representation (two generators span the same
// code iff these vectors are equal).
struct Z4Code {
    int n = 0;
    std::vector<Word> words;
    CodeType type;

    std::uint64_t size() const { return words.size(); }
    bool operator==(const Z4Code& o) const { return n == o.n && words == o.words; }
    bool operator<(const Z4Code& o) const {
        if (n != o.n) return n < o.n;
        return words < o.words;
    }
};

// All Z4-linear combinations of the generator rows; exactly 4^k1 * 2^k2
// codewords (standard form rows are independent).
Z4Code span(const StandardGenerator& g);

// Builds a code from an arbitrary word set: closes under the module
// operations is NOT done here -- the words must already form a submodule
// (checked), and the type is derived from the set sizes.
Z4Code code_from_words(int n, std::vector<Word> words);

bool is_submodule(const Z4Code& c);

// Type of the span of arbitrary generating rows, via Z4 row reduction
// (unit pivots first, then 2-pivots).
CodeType compute_type(const std::vector<Vec>& rows);

// Type recovered from a full codeword set: |2C| = 2^k1 and |C| = 4^k1 2^k2.
CodeType type_of_word_set(int n, const std::vector<Word>& words);

// Standard form of arbitrary generating rows. `col_from[j]` is the input
// column that landed at column j, so span(gen) = permute_coords(span(rows))
// under that mapping.
struct Standardized {
    StandardGenerator gen;
    std::vector<int> col_from;
};
Standardized standardize(const std::vector<Vec>& rows, int n);

// Dual code generator, re-permuted into standard form. The dual of
// [I A B; 0 2I 2D] has blocks [-B^T - D^T A^T, D^T, I; 2A^T, 2I, 0]; moving
// the trailing identity to the front restores the standard layout. As with
// standardize, `col_from[j]` records which original coordinate sits at
// column j of `gen`.
struct DualResult {
    StandardGenerator gen;
    std::vector<int> col_from;
};
DualResult dual(const StandardGenerator& g);

// The dual codeword set expressed on the ORIGINAL coordinates.
Z4Code dual_code(const StandardGenerator& g);

// new coordinate j of every word = old coordinate from[j]
Z4Code permute_coords(const Z4Code& c, const std::vector<int>& from);

// Binary [n, k1] residue code: every codeword reduced mod 2. Codewords are
// bitmasks with coordinate i at bit i.
struct BinaryCode {
    int n = 0;
    std::vector<std::uint32_t> gen_rows;
    std::vector<std::uint32_t> words; // sorted, unique

    bool operator==(const BinaryCode&) const = default;
};
BinaryCode residue(const StandardGenerator& g);
BinaryCode residue(const Z4Code& c);

// Length n+1 code with a zero coordinate appended to every codeword.
Z4Code trivial_extension(const Z4Code& c);

// True iff some coordinate is 0 in every codeword -- equivalently, iff the
// code is monomially equivalent to a trivial extension (monomial maps send
// identically-zero coordinates to identically-zero coordinates, so the
// zero-column test is exact, not just necessary).
bool has_zero_coordinate(const Z4Code& c);

// --- generator matrix text format -----------------------------------------
//
// Standard:  "n k1 k2" on the first line, then k1+k2 rows of n digits.
// Raw:       "raw n m" on the first line, then m arbitrary Z4 rows; the rows
//            are normalized via standardize().
struct ParsedGenerator {
    StandardGenerator gen;
    bool was_raw = false;
    std::vector<int> col_from; // identity unless was_raw
};
ParsedGenerator read_generator(std::istream& in);
ParsedGenerator read_generator_file(const std::string& path);
void write_generator(std::ostream& out, const StandardGenerator& g);
std::string to_text(const StandardGenerator& g);

} // namespace z4
