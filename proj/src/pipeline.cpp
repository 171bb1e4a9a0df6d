#include "z4/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace z4 {

void Reducer::add(RepEntry entry) {
    auto& bucket = buckets_[entry.fp];
    for (std::size_t idx : bucket) {
        RepEntry& rep = entries_[idx];
        if (rep.code == entry.code) return; // same code, distinct matrix
        if (are_equivalent(rep.code, entry.code)) {
            if (entry.code < rep.code) rep = std::move(entry);
            return;
        }
    }
    bucket.push_back(entries_.size());
    entries_.push_back(std::move(entry));
}

std::vector<RepEntry> Reducer::take_entries() {
    std::vector<RepEntry> out = std::move(entries_);
    entries_.clear();
    buckets_.clear();
    return out;
}

void reduce_into(std::vector<RepEntry>& reps, std::vector<RepEntry>&& incoming) {
    for (RepEntry& e : incoming) {
        bool placed = false;
        for (RepEntry& rep : reps) {
            if (rep.code == e.code) { // cheap scan before any search
                placed = true;
                break;
            }
        }
        if (placed) continue;
        for (RepEntry& rep : reps) {
            if (!(rep.fp == e.fp)) continue;
            if (are_equivalent(rep.code, e.code)) {
                if (e.code < rep.code) rep = std::move(e);
                placed = true;
                break;
            }
        }
        if (!placed) reps.push_back(std::move(e));
    }
}

std::vector<RepEntry> classify_candidates(int n, int k1, int k2, int threads,
                                          double time_budget_seconds) {
    const int tasks = candidate_task_count(n, k1, k2);
    const auto start = std::chrono::steady_clock::now();
    std::atomic<bool> out_of_time{false};

    auto run_task = [&](int t, Reducer& r) {
        if (out_of_time.load(std::memory_order_relaxed)) return;
        if (time_budget_seconds > 0) {
            const std::chrono::duration<double> used =
                std::chrono::steady_clock::now() - start;
            if (used.count() > time_budget_seconds) {
                out_of_time.store(true, std::memory_order_relaxed);
                return;
            }
        }
        for_each_candidate_in_task(n, k1, k2, t, [&](const StandardGenerator& g) {
            Z4Code code = span(g);
            Fingerprint fp = fingerprint(code);
            r.add({g, std::move(code), std::move(fp)});
        });
    };

    // Classes found so far, bucketed by fingerprint. Tasks are processed in
    // fixed-size chunks; each chunk's entries join their buckets in task
    // order and the touched buckets then reduce independently, keeping the
    // result schedule-independent and the footprint bounded by one chunk.
    std::map<Fingerprint, std::vector<RepEntry>> classes;
    const int chunk = std::max(16, 8 * std::max(threads, 1));
    for (int base = 0; base < tasks; base += chunk) {
        const int end = std::min(tasks, base + chunk);
        std::vector<Reducer> local(end - base);
#ifdef _OPENMP
        if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
            for (int t = base; t < end; ++t) run_task(t, local[t - base]);
        } else {
            for (int t = base; t < end; ++t) run_task(t, local[t - base]);
        }
#else
        for (int t = base; t < end; ++t) run_task(t, local[t - base]);
#endif
        if (out_of_time.load())
            throw CellIncomplete("classification incomplete: time budget exceeded");

        std::map<Fingerprint, std::vector<RepEntry>> fresh;
        for (Reducer& r : local)
            for (RepEntry& e : r.take_entries()) fresh[e.fp].push_back(std::move(e));

        std::vector<std::pair<std::vector<RepEntry>*, std::vector<RepEntry>>> work;
        work.reserve(fresh.size());
        for (auto& [fp, entries] : fresh)
            work.emplace_back(&classes[fp], std::move(entries));
#ifdef _OPENMP
        if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
            for (std::size_t b = 0; b < work.size(); ++b)
                reduce_into(*work[b].first, std::move(work[b].second));
        } else {
            for (auto& [reps, entries] : work) reduce_into(*reps, std::move(entries));
        }
#else
        for (auto& [reps, entries] : work) reduce_into(*reps, std::move(entries));
#endif
    }

    std::vector<RepEntry> out;
    for (auto& [fp, reps] : classes)
        for (RepEntry& e : reps) out.push_back(std::move(e));
    std::sort(out.begin(), out.end(),
              [](const RepEntry& a, const RepEntry& b) { return a.code < b.code; });
    return out;
}

} // namespace z4
