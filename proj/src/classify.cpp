#include "z4/classify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace z4 {

namespace fs = std::filesystem;
using nlohmann::json;

int resolve_threads(int requested) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("Z4CLASS_THREADS")) t = std::atoi(env);
    }
#ifdef _OPENMP
    const int hw = omp_get_max_threads();
#else
    const int hw = 1;
#endif
    if (t <= 0) t = hw;
    return std::min(t, hw) < 1 ? 1 : std::min(t, hw);
}

ClassificationCell classify_cell(int n, int k1, int k2, const ClassifyOptions& opt) {
    if (n < 1 || k1 < 0 || k2 < 0 || k1 + k2 < 1 || k1 + k2 > n)
        throw std::invalid_argument("classify_cell: invalid (n,k1,k2)");

    if (!opt.out_dir.empty()) {
        if (auto cached = load_cell(opt.out_dir, n, k1, k2)) return *cached;
    }

    const auto start = std::chrono::steady_clock::now();
    ClassificationCell cell;
    cell.n = n;
    cell.k1 = k1;
    cell.k2 = k2;

    const auto closed = closed_form_count(n, k1, k2);
    if (opt.fast && closed) {
        std::vector<std::pair<Z4Code, StandardGenerator>> reps;
        for (const StandardGenerator& g : closed_form_representatives(n, k1, k2))
            reps.emplace_back(span(g), g);
        std::sort(reps.begin(), reps.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [code, gen] : reps) cell.representatives.push_back(gen);
        cell.method = Method::closed_form;
    } else {
        const int threads = resolve_threads(opt.threads);
        std::vector<RepEntry> reps =
            classify_candidates(n, k1, k2, threads, opt.time_budget_seconds);
        for (RepEntry& r : reps) cell.representatives.push_back(std::move(r.gen));
        cell.method = Method::exhaustive;
        if (closed && *closed != cell.representatives.size()) {
            std::ostringstream os;
            os << "classify_cell(" << n << ',' << k1 << ',' << k2
               << "): exhaustive count " << cell.representatives.size()
               << " contradicts closed form " << *closed;
            throw std::logic_error(os.str());
        }
    }
    cell.n_prime = cell.representatives.size();
    cell.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!opt.out_dir.empty()) write_cell(cell, opt.out_dir);
    return cell;
}

ClassificationTable classify_length(int n, const PriorCounts* prior,
                                    const ClassifyOptions& opt) {
    if (n < 1) throw std::invalid_argument("classify_length: n must be >= 1");
    if (n >= 2 && prior == nullptr)
        throw std::invalid_argument("classify_length: prior table required for n >= 2");

    ClassificationTable table;
    table.n = n;
    for (int k1 = 0; k1 <= n; ++k1) {
        for (int k2 = 0; k1 + k2 <= n; ++k2) {
            if (k1 + k2 < 1) continue;
            ClassificationCell cell = classify_cell(n, k1, k2, opt);
            std::uint64_t count = cell.n_prime;
            if (prior) {
                auto it = prior->find({k1, k2});
                if (it != prior->end()) count += it->second;
            }
            table.n_prime_total += cell.n_prime;
            table.n_total += count;
            table.n_counts[{k1, k2}] = count;
            table.cells[{k1, k2}] = std::move(cell);
        }
    }
    return table;
}

DualityReport duality_check(const ClassificationTable& table) {
    DualityReport report;
    for (const auto& [key, count] : table.n_counts) {
        const auto [k1, k2] = key;
        const int pk1 = table.n - k1 - k2;
        std::uint64_t partner;
        if (pk1 == 0 && k2 == 0) {
            partner = 1; // the zero code forms a single class
        } else {
            auto it = table.n_counts.find({pk1, k2});
            if (it == table.n_counts.end()) {
                report.ok = false;
                report.violations.push_back("missing partner cell for (" +
                                            std::to_string(k1) + "," + std::to_string(k2) + ")");
                continue;
            }
            partner = it->second;
        }
        if (count != partner) {
            std::ostringstream os;
            os << "N(" << table.n << ',' << k1 << ',' << k2 << ")=" << count
               << " != N(" << table.n << ',' << pk1 << ',' << k2 << ")=" << partner;
            report.ok = false;
            report.violations.push_back(os.str());
        }
    }
    return report;
}

OptimalityReport optimality_report(const ClassificationCell& cell) {
    if (cell.representatives.empty())
        throw std::invalid_argument("optimality_report: empty cell");
    OptimalityReport rep;
    rep.n = cell.n;
    rep.k1 = cell.k1;
    rep.k2 = cell.k2;
    std::vector<WeightProfile> profiles;
    for (const StandardGenerator& g : cell.representatives) {
        const WeightProfile p = weight_profile(span(g));
        if (!p.defined) throw std::invalid_argument("optimality_report: zero code in cell");
        profiles.push_back(p);
    }
    for (int m = 0; m < 3; ++m) {
        auto d = [&](const WeightProfile& p) {
            return m == 0 ? p.d_h : m == 1 ? p.d_l : p.d_e;
        };
        int best = 0;
        for (const auto& p : profiles) best = std::max(best, d(p));
        rep.best[m] = best;
        for (std::size_t i = 0; i < profiles.size(); ++i)
            if (d(profiles[i]) == best) rep.attaining[m].push_back(i);
    }
    return rep;
}

std::string to_string(const OptimalityReport& report) {
    static const char* names[3] = {"hamming", "lee", "euclidean"};
    std::ostringstream os;
    for (int m = 0; m < 3; ++m) {
        os << names[m] << "-optimal: d=" << report.best[m] << ", representatives";
        for (std::size_t i : report.attaining[m]) os << ' ' << i;
        os << '\n';
    }
    return os.str();
}

// --- persistence -----------------------------------------------------------

std::string cell_dir_name(int n, int k1, int k2) {
    std::ostringstream os;
    os << "cell_" << n << '_' << k1 << '_' << k2;
    return os.str();
}

namespace {

std::string rep_file_name(std::size_t idx) {
    std::ostringstream os;
    os << "gen_" << idx << ".txt";
    return os.str();
}

} // namespace

void write_cell(const ClassificationCell& cell, const std::string& dir) {
    const fs::path cdir = fs::path(dir) / cell_dir_name(cell.n, cell.k1, cell.k2);
    fs::create_directories(cdir);
    json manifest;
    manifest["n"] = cell.n;
    manifest["k1"] = cell.k1;
    manifest["k2"] = cell.k2;
    manifest["n_prime"] = cell.n_prime;
    manifest["method"] = cell.method == Method::exhaustive ? "exhaustive" : "closed_form";
    manifest["elapsed_seconds"] = cell.elapsed_seconds;
    manifest["tool_version"] = kToolVersion;
    json reps = json::array();
    for (std::size_t i = 0; i < cell.representatives.size(); ++i) {
        const std::string name = rep_file_name(i);
        std::ofstream out(cdir / name);
        write_generator(out, cell.representatives[i]);
        reps.push_back(name);
    }
    manifest["representatives"] = reps;
    std::ofstream out(cdir / "manifest.json");
    out << manifest.dump(2) << '\n';
}

std::optional<ClassificationCell> load_cell(const std::string& dir, int n, int k1, int k2) {
    const fs::path cdir = fs::path(dir) / cell_dir_name(n, k1, k2);
    std::ifstream in(cdir / "manifest.json");
    if (!in) return std::nullopt;
    json manifest;
    in >> manifest;
    if (manifest["n"] != n || manifest["k1"] != k1 || manifest["k2"] != k2)
        throw std::runtime_error("manifest mismatch in " + cdir.string());
    ClassificationCell cell;
    cell.n = n;
    cell.k1 = k1;
    cell.k2 = k2;
    cell.n_prime = manifest["n_prime"].get<std::uint64_t>();
    cell.method = manifest["method"] == "exhaustive" ? Method::exhaustive : Method::closed_form;
    cell.elapsed_seconds = manifest["elapsed_seconds"].get<double>();
    for (const auto& name : manifest["representatives"]) {
        const ParsedGenerator p = read_generator_file((cdir / name.get<std::string>()).string());
        cell.representatives.push_back(p.gen);
    }
    if (cell.representatives.size() != cell.n_prime)
        throw std::runtime_error("manifest count mismatch in " + cdir.string());
    return cell;
}

void write_table(const ClassificationTable& table, const std::string& dir) {
    fs::create_directories(dir);
    json t;
    t["n"] = table.n;
    t["tool_version"] = kToolVersion;
    json cells = json::array();
    for (const auto& [key, cell] : table.cells) {
        json c;
        c["k1"] = key.first;
        c["k2"] = key.second;
        c["n_prime"] = cell.n_prime;
        c["n"] = table.n_counts.at(key);
        c["dir"] = cell_dir_name(table.n, key.first, key.second);
        cells.push_back(c);
    }
    t["cells"] = cells;
    t["n_prime_total"] = table.n_prime_total;
    t["n_total"] = table.n_total;
    t["duality_ok"] = duality_check(table).ok;
    std::ostringstream name;
    name << "table_n" << table.n << ".json";
    std::ofstream out(fs::path(dir) / name.str());
    out << t.dump(2) << '\n';
}

std::optional<PriorCounts> load_table_counts(const std::string& dir, int n) {
    std::ostringstream name;
    name << "table_n" << n << ".json";
    std::ifstream in(fs::path(dir) / name.str());
    if (!in) return std::nullopt;
    json t;
    in >> t;
    if (t["n"] != n) throw std::runtime_error("table file has wrong length");
    PriorCounts counts;
    for (const auto& c : t["cells"])
        counts[{c["k1"].get<int>(), c["k2"].get<int>()}] = c["n"].get<std::uint64_t>();
    return counts;
}

} // namespace z4
