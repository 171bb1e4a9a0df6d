// End-to-end classification: per-cell class representatives, per-length
// tables with the trivial-extension recurrence N(n,k1,k2) =
// N'(n,k1,k2) + N(n-1,k1,k2), the duality consistency check
// N(n,k1,k2) = N(n,n-k1-k2,k2), optimality reports, and JSON manifest
// persistence with cell-level resume.
#pragma once

#include "z4/pipeline.hpp"

#include <map>
#include <optional>
#include <string>

namespace z4 {

inline constexpr const char* kToolVersion = "z4class 1.0.0";

enum class Method { closed_form, exhaustive };

struct ClassifyOptions {
    int threads = 0; // 0 = Z4CLASS_THREADS env or OpenMP default; 1 = serial
    bool fast = false; // trust closed forms where available
    double time_budget_seconds = 0.0; // 0 = unlimited; exceeded -> CellIncomplete
    std::string out_dir; // persist + resume when nonempty
};

int resolve_threads(int requested);

struct ClassificationCell {
    int n = 0, k1 = 0, k2 = 0;
    std::vector<StandardGenerator> representatives; // sorted by codeword set
    std::uint64_t n_prime = 0;
    Method method = Method::exhaustive;
    double elapsed_seconds = 0.0;
};

ClassificationCell classify_cell(int n, int k1, int k2, const ClassifyOptions& opt = {});

// N(n-1,k1,k2) by (k1,k2); what the recurrence needs from the prior length.
using PriorCounts = std::map<std::pair<int, int>, std::uint64_t>;

struct ClassificationTable {
    int n = 0;
    std::map<std::pair<int, int>, ClassificationCell> cells;
    std::map<std::pair<int, int>, std::uint64_t> n_counts; // N(n,k1,k2)
    std::uint64_t n_prime_total = 0;
    std::uint64_t n_total = 0;

    PriorCounts counts() const { return n_counts; }
};

// prior must be present for n >= 2. Cells with k1+k2 = 0 are excluded (the
// zero code); duality_check supplies N(n,0,0) = 1 where the identity needs it.
ClassificationTable classify_length(int n, const PriorCounts* prior,
                                    const ClassifyOptions& opt = {});

struct DualityReport {
    bool ok = true;
    std::vector<std::string> violations;
};
DualityReport duality_check(const ClassificationTable& table);

struct OptimalityReport {
    int n = 0, k1 = 0, k2 = 0;
    // per metric (hamming, lee, euclidean): best minimum weight and the
    // representatives (indices into the cell) attaining it
    std::array<int, 3> best{};
    std::array<std::vector<std::size_t>, 3> attaining;
};
OptimalityReport optimality_report(const ClassificationCell& cell);
std::string to_string(const OptimalityReport& report);

// --- persistence -----------------------------------------------------------
std::string cell_dir_name(int n, int k1, int k2);
void write_cell(const ClassificationCell& cell, const std::string& dir);
std::optional<ClassificationCell> load_cell(const std::string& dir, int n, int k1, int k2);
void write_table(const ClassificationTable& table, const std::string& dir);
std::optional<PriorCounts> load_table_counts(const std::string& dir, int n);

} // namespace z4
