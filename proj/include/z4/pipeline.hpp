// The enumerate -> span -> fingerprint -> reduce kernels behind classify_cell.
// The candidate stream is consumed task by task; every task feeds an online
// reducer that keeps one representative per equivalence class seen so far
// (always the lexicographically smallest codeword set). Task results are
// folded into per-fingerprint buckets in task order, and buckets reduce
// independently, so the output is identical whether tasks and buckets run
// serially or on OpenMP workers -- the serial path is the reference the
// parallel path is tested against.
#pragma once

#include "z4/enumeration.hpp"
#include "z4/equivalence.hpp"

#include <map>

namespace z4 {

struct RepEntry {
    StandardGenerator gen;
    Z4Code code;
    Fingerprint fp;
};

// Online per-class reduction keyed by fingerprint.
class Reducer {
public:
    void add(RepEntry entry);
    std::vector<RepEntry> take_entries(); // insertion order

    std::size_t size() const { return entries_.size(); }

private:
    std::map<Fingerprint, std::vector<std::size_t>> buckets_;
    std::vector<RepEntry> entries_;
};

// Folds `incoming` into an existing pairwise-inequivalent rep list in order.
void reduce_into(std::vector<RepEntry>& reps, std::vector<RepEntry>&& incoming);

// Representatives of all classes spanned by the pruned candidate stream for
// the cell, sorted by codeword set. threads <= 1 runs the serial reference;
// otherwise tasks and bucket merges are distributed over OpenMP workers.
// Both produce identical output.
std::vector<RepEntry> classify_candidates(int n, int k1, int k2, int threads,
                                          double time_budget_seconds = 0.0);

struct CellIncomplete : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace z4
