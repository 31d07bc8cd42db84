#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mchyper/constructions.hpp"
#include "mchyper/prng.hpp"
#include "mchyper/sampling.hpp"
#include "mchyper/solver.hpp"

namespace mchyper {

// One record of a parameter-sweep campaign.
struct ScanRow {
    int n = 0;
    int r = 0; // colors
    int k = 0; // uniformity
    int l = 0; // degree level reported in `delta`
    std::int64_t delta = 0;
    int mc_lower = 0;
    int mc_upper = 0;
    std::string method; // exact | heuristic | theorem+construction
    std::uint64_t seed = 0;
    std::int64_t runtime_ms = 0;
};

struct ScanSpec {
    std::string family; // complete | extremal-example | random-min-degree
    std::vector<int> ns;
    int k = 3;       // uniformity (for extremal-example: the construction parameter r)
    int colors = -1; // default k+1
    int l = -1;      // default k-1
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string method = "auto"; // auto | exact | heuristic
    std::int64_t budget_nodes = 50'000'000;
    std::int64_t iterations = 100000;
    int restarts = 20;
    int workers = 1;
    std::vector<std::int64_t> delta_targets; // random-min-degree only
    std::int64_t edge_budget = 1000;         // random-min-degree: max deletions
};

inline std::vector<int> parse_int_grid(const nlohmann::json& j, const char* what) {
    std::vector<int> out;
    if (j.is_array()) {
        for (const auto& v : j) out.push_back(v.get<int>());
    } else if (j.is_object() && j.contains("from") && j.contains("to")) {
        for (int v = j["from"].get<int>(); v <= j["to"].get<int>(); ++v) out.push_back(v);
    } else if (j.is_number_integer()) {
        out.push_back(j.get<int>());
    } else {
        throw std::invalid_argument(std::string("scan spec: '") + what +
                                    "' must be an int, an array, or {from,to}");
    }
    return out;
}

inline ScanSpec parse_scan_spec(const nlohmann::json& j) {
    ScanSpec s;
    if (!j.contains("family")) throw std::invalid_argument("scan spec: missing 'family'");
    s.family = j["family"].get<std::string>();
    if (s.family != "complete" && s.family != "extremal-example" &&
        s.family != "random-min-degree")
        throw std::invalid_argument("scan spec: unknown family '" + s.family + "'");
    if (!j.contains("n")) throw std::invalid_argument("scan spec: missing 'n'");
    s.ns = parse_int_grid(j["n"], "n");
    if (j.contains("k")) s.k = j["k"].get<int>();
    if (j.contains("colors")) s.colors = j["colors"].get<int>();
    if (s.colors < 0) s.colors = s.k + 1;
    if (j.contains("l")) s.l = j["l"].get<int>();
    if (s.l < 0) s.l = s.k - 1;
    if (j.contains("seed")) {
        s.seed = j["seed"].get<std::uint64_t>();
        s.seed_set = true;
    }
    if (j.contains("method")) s.method = j["method"].get<std::string>();
    if (s.method != "auto" && s.method != "exact" && s.method != "heuristic")
        throw std::invalid_argument("scan spec: unknown method '" + s.method + "'");
    if (j.contains("budget_nodes")) s.budget_nodes = j["budget_nodes"].get<std::int64_t>();
    if (j.contains("iterations")) s.iterations = j["iterations"].get<std::int64_t>();
    if (j.contains("restarts")) s.restarts = j["restarts"].get<int>();
    if (j.contains("workers")) s.workers = j["workers"].get<int>();
    if (j.contains("delta_targets"))
        for (const auto& v : j["delta_targets"]) s.delta_targets.push_back(v.get<std::int64_t>());
    if (j.contains("edge_budget")) s.edge_budget = j["edge_budget"].get<std::int64_t>();
    if (s.family == "random-min-degree" && s.delta_targets.empty())
        throw std::invalid_argument("scan spec: random-min-degree needs 'delta_targets'");
    if (!s.seed_set && (s.family == "random-min-degree" || s.method != "exact"))
        throw std::invalid_argument("scan spec: 'seed' is required");
    return s;
}

inline std::vector<ScanRow> run_scan(const ScanSpec& raw, std::ostream* log = nullptr) {
    ScanSpec spec = raw;
    if (spec.colors < 0) spec.colors = spec.k + 1;
    if (spec.l < 0) spec.l = spec.k - 1;
    std::vector<ScanRow> rows;
    std::size_t index = 0;
    auto targets = spec.delta_targets.empty() ? std::vector<std::int64_t>{0} : spec.delta_targets;
    for (int n : spec.ns) {
        for (std::int64_t target : targets) {
            auto t0 = std::chrono::steady_clock::now();
            ScanRow row;
            row.n = n;
            row.r = spec.colors;
            row.l = spec.l;
            row.seed = mix_seed(spec.seed, index);

            Hypergraph g;
            if (spec.family == "complete") {
                row.k = spec.k;
                g = complete_hypergraph(n, spec.k);
            } else if (spec.family == "extremal-example") {
                row.k = spec.k;
                g = extremal_codegree_example(n, spec.k).hypergraph;
            } else {
                row.k = spec.k;
                g = random_min_degree_subhypergraph(n, spec.k, spec.l, target, spec.edge_budget,
                                                    row.seed);
            }
            row.delta = min_degree(g, spec.l).value;

            BoundsOptions bo;
            bo.seed = row.seed;
            bo.iterations = spec.iterations;
            bo.restarts = spec.restarts;
            bo.workers = spec.workers;
            bo.try_exact = spec.method == "exact";
            bo.exact_nodes = spec.budget_nodes;
            auto rep = mc_bounds(g, spec.colors, bo);
            row.mc_lower = rep.lower;
            row.mc_upper = rep.upper;
            row.method = rep.method;

            row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
            if (log)
                *log << spec.family << " n=" << row.n << " delta=" << row.delta << " mc in ["
                     << row.mc_lower << "," << row.mc_upper << "] via " << row.method << "\n";
            rows.push_back(std::move(row));
            ++index;
        }
    }
    return rows;
}

// Fixed column order; downstream diffs depend on it.
inline void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
    os << "n,r,k,l,delta,mc_lower,mc_upper,method,seed,runtime_ms\n";
    for (const auto& row : rows)
        os << row.n << ',' << row.r << ',' << row.k << ',' << row.l << ',' << row.delta << ','
           << row.mc_lower << ',' << row.mc_upper << ',' << row.method << ',' << row.seed << ','
           << row.runtime_ms << '\n';
}

} // namespace mchyper
