// Hamming / Lee / Euclidean weights, minimum-weight profiles, and the three
// weight enumerators. Enumerators are sparse exponent->count maps so that
// polynomial equality is a plain map comparison.
#pragma once

#include "z4/code.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace z4 {

inline int wt_h(Word w) { return word_units(w) + word_twos(w); }
inline int wt_l(Word w) { return word_units(w) + 2 * word_twos(w); }
inline int wt_e(Word w) { return word_units(w) + 4 * word_twos(w); }

int wt_h(const Vec& v);
int wt_l(const Vec& v);
int wt_e(const Vec& v);

enum class WeightKind { hamming, lee, symmetrized };

// Exponent tuples are (x,y,0) for hamming/lee and (x,y,z) = (n0, n1+n3, n2)
// for the symmetrized enumerator.
struct WeightEnumerator {
    WeightKind kind = WeightKind::hamming;
    std::map<std::array<int, 3>, std::int64_t> terms;

    bool operator==(const WeightEnumerator&) const = default;
};

WeightEnumerator enumerator(const Z4Code& c, WeightKind kind);

// Canonical text form, e.g. "x^2 + 3*y^2"; terms ordered by descending
// exponent tuple (the all-x term first).
std::string to_string(const WeightEnumerator& we);

// The symmetrized enumerator determines the other two: y and z carry
// per-symbol Hamming weight 1 (z -> y), and Lee weights 1 and 2
// (x -> x^2, y -> x*y, z -> y^2).
WeightEnumerator hwe_from_swe(const WeightEnumerator& swe, int n);
WeightEnumerator lwe_from_swe(const WeightEnumerator& swe, int n);

// Minimum weights over nonzero codewords; undefined for the zero code.
struct WeightProfile {
    bool defined = false;
    int d_h = 0;
    int d_l = 0;
    int d_e = 0;

    bool operator==(const WeightProfile&) const = default;
};
WeightProfile weight_profile(const Z4Code& c);

enum class Metric { hamming, lee, euclidean };

// The members of `family` attaining the largest minimum weight for the
// metric. All codes must share (n,k1,k2). Returned sorted canonically, so
// the result does not depend on the input order.
std::vector<Z4Code> optimal_codes(const std::vector<Z4Code>& family, Metric metric);

} // namespace z4
