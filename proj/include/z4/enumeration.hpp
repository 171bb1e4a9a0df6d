// Pruned candidate generation: standard generator matrices with row-sorted A,
// a B-block from the restricted family, column-sorted stacked [B; 2D] and no
// zero column in it. Candidates are produced column by column in
// nondecreasing order (combinations with repetition), so the column-sort
// filter never rejects anything. Also hosts the closed-form class counts and
// the three-term symmetrized enumerator family used as independent oracles.
#pragma once

#include "z4/code.hpp"
#include "z4/weights.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace z4 {

// All k1 x k2 (0,1)-matrices with lex-nondecreasing rows.
std::vector<Mat> enumerate_A(int k1, int k2);

// True iff B is a (0,2)-matrix, or the topmost row containing a unit has all
// entries in {0,1,2}.
bool in_B_family(const Mat& B);

struct CandidateFilterReport {
    std::uint64_t s_count = 0;         // all (A,B,D)
    std::uint64_t t_count = 0;         // A row-sorted
    std::uint64_t u_count = 0;         // + B in the restricted family
    std::uint64_t v_count = 0;         // + stacked [B;2D] column-sorted
    std::uint64_t candidate_count = 0; // + no zero column
};

CandidateFilterReport filter_report(int n, int k1, int k2);

// The candidate stream is split into deterministic tasks (one per choice of
// A and first stacked column) so workers can process it independently.
int candidate_task_count(int n, int k1, int k2);
void for_each_candidate_in_task(int n, int k1, int k2, int task,
                                const std::function<void(const StandardGenerator&)>& fn);
void for_each_candidate(int n, int k1, int k2,
                        const std::function<void(const StandardGenerator&)>& fn);
std::vector<StandardGenerator> enumerate_candidates(int n, int k1, int k2);

// Hand-classified cell counts for the special (k1,k2) shapes; nullopt when
// the shape is not covered. Overlapping shapes are cross-checked and must
// agree.
std::optional<std::uint64_t> closed_form_count(int n, int k1, int k2);

// Throws if any two closed-form shapes disagree on a cell with n <= n_max.
void closed_form_self_check(int n_max);

// Pairwise-inequivalent representatives realizing closed_form_count, built
// from the explicit constructions behind each formula.
std::vector<StandardGenerator> closed_form_representatives(int n, int k1, int k2);

// swe of the one-generator code spanned by (0^m0, 1^(m1-1), 2^(n-m0-m1), 1):
// x^n + 2 x^m0 y^m1 z^(n-m0-m1) + x^(n-m1) z^m1. Requires 0 <= m0 <= n-2 and
// 1 <= m1 <= n-m0.
WeightEnumerator special_swe(int n, int m0, int m1);

// The generator vector realizing special_swe(n, m0, m1).
Vec special_swe_vector(int n, int m0, int m1);

} // namespace z4
