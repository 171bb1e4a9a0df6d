// Monomial maps (coordinate permutation + per-coordinate sign flips), the
// invariant fingerprint used for bucketing, and the backtracking search
// deciding equivalence of two codes with a verified witness.
#pragma once

#include "z4/code.hpp"
#include "z4/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace z4 {

// Acts on a vector by first flipping signs, then permuting:
// y[perm[i]] = sign[i] * x[i]. perm and sign are indexed by the SOURCE
// coordinate; sign entries are +1 or -1 (-1 meaning multiply by 3 mod 4).
struct Monomial {
    std::vector<int> perm;
    std::vector<std::int8_t> sign;

    int n() const { return static_cast<int>(perm.size()); }
    bool operator==(const Monomial&) const = default;
};

Monomial identity_monomial(int n);
Monomial compose(const Monomial& outer, const Monomial& inner); // outer after inner
Monomial inverse(const Monomial& m);

Word apply(const Monomial& m, Word w);
Z4Code apply_monomial(const Z4Code& c, const Monomial& m);

// One-line notation with 1-based positions, e.g. "perm=3 1 2; signs=+-+".
std::string to_string(const Monomial& m);

// Monomial-invariant data: the Hamming and Lee weight distributions plus the
// multiset of per-coordinate symbol counts (#0, #units, #2). Equal for
// equivalent codes; cheap to compare.
struct Fingerprint {
    std::vector<std::int64_t> hamming_dist; // index = Hamming weight
    std::vector<std::int64_t> lee_dist;     // index = Lee weight
    std::vector<std::array<std::int32_t, 3>> column_profile; // sorted

    bool operator==(const Fingerprint&) const = default;
    bool operator<(const Fingerprint& o) const;
};

Fingerprint fingerprint(const Z4Code& c);

// Per-coordinate (#0s, #units, #2s) over the codeword set, unsorted.
std::vector<std::array<std::int32_t, 3>> column_counts(const Z4Code& c);

// A witness P with apply_monomial(c2, P) = c, or nullopt. The witness is
// re-verified before it is returned.
std::optional<Monomial> are_equivalent(const Z4Code& c, const Z4Code& c2);

struct EquivClass {
    Z4Code representative; // lexicographically smallest member
    std::vector<std::size_t> members; // indices into the input, ascending
};

// Partitions codes of uniform length and type into equivalence classes.
// Classes are sorted by representative; the result is independent of the
// input order.
std::vector<EquivClass> partition_classes(const std::vector<Z4Code>& codes);

} // namespace z4
