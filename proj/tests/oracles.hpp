// Test-only oracles, kept independent of the implementation paths they check:
// closure-based spans, set-based type recovery, and exhaustive monomial
// search over all n! * 2^n maps.
#pragma once

#include "z4/code.hpp"
#include "z4/equivalence.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>

namespace oracle {

// Span by closure: repeatedly add sums and doubles until the set is stable.
inline std::vector<z4::Word> closure_span(const std::vector<z4::Vec>& rows) {
    std::set<z4::Word> words{0};
    for (const z4::Vec& r : rows) words.insert(z4::pack(r));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<z4::Word> cur(words.begin(), words.end());
        for (z4::Word a : cur)
            for (z4::Word b : cur)
                if (words.insert(z4::word_add(a, b)).second) grew = true;
    }
    return {words.begin(), words.end()};
}

// (k1,k2) from the codeword set alone: |2C| = 2^k1, |C| = 4^k1 2^k2.
inline std::pair<int, int> type_from_set(const std::vector<z4::Word>& words) {
    std::set<z4::Word> doubled;
    for (z4::Word w : words) doubled.insert(z4::word_dbl(w));
    int k1 = 0, log_size = 0;
    while ((std::size_t(1) << (k1 + 1)) <= doubled.size()) ++k1;
    while ((std::size_t(1) << (log_size + 1)) <= words.size()) ++log_size;
    return {k1, log_size - 2 * k1};
}

// All monomials of length n, in a fixed order.
inline std::vector<z4::Monomial> all_monomials(int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<z4::Monomial> out;
    do {
        for (unsigned signs = 0; signs < (1u << n); ++signs) {
            z4::Monomial m;
            m.perm = perm;
            m.sign.resize(n);
            for (int i = 0; i < n; ++i)
                m.sign[i] = (signs >> i) & 1 ? -1 : 1;
            out.push_back(std::move(m));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Exhaustive equivalence test over every monomial; the reference for the
// pruned search.
inline std::optional<z4::Monomial> brute_force_equivalent(const z4::Z4Code& c,
                                                          const z4::Z4Code& c2) {
    for (const z4::Monomial& m : all_monomials(c.n))
        if (z4::apply_monomial(c2, m) == c) return m;
    return std::nullopt;
}

inline z4::Monomial random_monomial(int n, std::mt19937& rng) {
    z4::Monomial m = z4::identity_monomial(n);
    std::shuffle(m.perm.begin(), m.perm.end(), rng);
    for (int i = 0; i < n; ++i) m.sign[i] = rng() & 1 ? -1 : 1;
    return m;
}

// A random standard-form generator (unrestricted S-form blocks).
inline z4::StandardGenerator random_generator(int n, int k1, int k2, std::mt19937& rng) {
    const int l = n - k1 - k2;
    z4::Mat A(k1, k2), B(k1, l), D(k2, l);
    for (auto& v : A.a) v = rng() & 1;
    for (auto& v : B.a) v = rng() & 3;
    for (auto& v : D.a) v = rng() & 1;
    return z4::StandardGenerator::make(n, k1, k2, A, B, D);
}

inline z4::StandardGenerator random_generator(int n, std::mt19937& rng) {
    while (true) {
        const int k1 = static_cast<int>(rng() % (n + 1));
        const int k2 = static_cast<int>(rng() % (n - k1 + 1));
        if (k1 + k2 >= 1) return random_generator(n, k1, k2, rng);
    }
}

// Every (A,B,D) standard-form generator for the cell, no filters.
inline std::vector<z4::StandardGenerator> all_standard_generators(int n, int k1, int k2) {
    const int l = n - k1 - k2;
    std::vector<z4::StandardGenerator> out;
    const std::uint64_t na = std::uint64_t(1) << (k1 * k2);
    const std::uint64_t nb = std::uint64_t(1) << (2 * k1 * l);
    const std::uint64_t nd = std::uint64_t(1) << (k2 * l);
    for (std::uint64_t ai = 0; ai < na; ++ai) {
        z4::Mat A(k1, k2);
        for (int i = 0; i < k1 * k2; ++i) A.a[i] = (ai >> i) & 1;
        for (std::uint64_t bi = 0; bi < nb; ++bi) {
            z4::Mat B(k1, l);
            for (int i = 0; i < k1 * l; ++i) B.a[i] = (bi >> (2 * i)) & 3;
            for (std::uint64_t di = 0; di < nd; ++di) {
                z4::Mat D(k2, l);
                for (int i = 0; i < k2 * l; ++i) D.a[i] = (di >> i) & 1;
                out.push_back(z4::StandardGenerator::make(n, k1, k2, A, B, D));
            }
        }
    }
    return out;
}

} // namespace oracle
