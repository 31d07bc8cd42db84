// Command-line surface: generation, solving, theorem verification, and
// parameter scans over monochromatic-component problems.
//
// Exit codes: 0 success, 1 verification / self-check failure, 2 usage or
// parameter error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mchyper/constructions.hpp"
#include "mchyper/hypergraph.hpp"
#include "mchyper/io.hpp"
#include "mchyper/sampling.hpp"
#include "mchyper/scan.hpp"
#include "mchyper/serialize.hpp"
#include "mchyper/solver.hpp"
#include "mchyper/verify.hpp"
#include "mchyper/witness.hpp"

namespace {

using namespace mchyper;

std::string fmt_vertices(const std::vector<int>& vs, bool one_indexed) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i] + (one_indexed ? 1 : 0));
    }
    return s + "}";
}

// "8..12" or "8" -> list of ints
std::vector<int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    std::vector<int> out;
    if (dots == std::string::npos) {
        out.push_back(std::stoi(s));
        return out;
    }
    int lo = std::stoi(s.substr(0, dots));
    int hi = std::stoi(s.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("range '" + s + "' is empty");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

std::int64_t env_node_budget() {
    if (const char* env = std::getenv("MCHYPER_NODE_BUDGET")) return std::stoll(env);
    return -1;
}

void write_json(const nlohmann::json& j, const std::string& path) {
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open for writing: " + path);
    f << j.dump(2) << '\n';
}

int run_gen(const std::string& name, int n, int r, int q, int mult, int k,
            const std::string& out_prefix, bool one_indexed) {
    if (name == "complete") {
        Hypergraph g = complete_hypergraph(n, k);
        save_hypergraph(out_prefix + ".hg", g);
        nlohmann::json j{{"construction", "complete"}, {"n", n}, {"k", k},
                         {"m", g.edge_count()}, {"checks_passed", true}};
        write_json(j, out_prefix + ".json");
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    ConstructionOutput out;
    std::string label = name;
    if (name == "gyarfas-partition") {
        out = gyarfas_partition_coloring(n, r);
    } else if (name == "extremal-example") {
        out = extremal_codegree_example(n, r);
    } else if (name == "affine-plane") {
        out = affine_plane_coloring(q, mult);
    } else {
        throw std::invalid_argument("unknown construction '" + name + "'");
    }
    save_hypergraph(out_prefix + ".hg", out.hypergraph);
    save_coloring(out_prefix + ".col", out.coloring);
    nlohmann::json stats = construction_stats_json(label, out);
    write_json(stats, out_prefix + ".json");
    std::cout << stats.dump(2) << '\n';
    if (one_indexed) {
        auto lc = largest_mono_component(out.hypergraph, out.coloring);
        std::cout << "largest component (1-indexed): "
                  << fmt_vertices(lc.vertices, true) << '\n';
    }
    return stats["checks_passed"].get<bool>() ? 0 : 1;
}

int run_mc(const std::string& file, int r, const std::string& mode, std::int64_t budget_nodes,
           double time_limit, std::uint64_t seed, bool seed_given, std::int64_t iterations,
           int restarts, int workers, const std::string& out, std::string witness_out,
           bool try_exact) {
    Hypergraph g = load_hypergraph(file, &std::cerr);
    if ((mode == "heuristic" || mode == "bounds") && !seed_given)
        throw std::invalid_argument("--seed is required for mode '" + mode + "'");
    if (witness_out.empty()) witness_out = file + "." + mode + ".col";

    nlohmann::json report;
    if (mode == "brute") {
        int value = mc_brute(g, r);
        report = {{"value", value}, {"complete", true}, {"mode", "brute"}};
    } else if (mode == "exact") {
        ExactOptions opt;
        opt.max_nodes = budget_nodes;
        opt.max_seconds = time_limit;
        opt.workers = workers;
        opt.seed = seed;
        auto res = mc_exact(g, r, opt);
        save_coloring(witness_out, res.witness);
        report = to_json(res, witness_out, seed);
        report["mode"] = "exact";
    } else if (mode == "heuristic") {
        auto res = mc_heuristic(g, r, iterations, restarts, seed);
        save_coloring(witness_out, res.witness);
        report = to_json(res, witness_out, iterations, restarts);
        report["mode"] = "heuristic";
    } else if (mode == "bounds") {
        BoundsOptions opt;
        opt.seed = seed;
        opt.iterations = iterations;
        opt.restarts = restarts;
        opt.try_exact = try_exact;
        opt.exact_nodes = budget_nodes > 0 ? budget_nodes : 50'000'000;
        opt.workers = workers;
        auto rep = mc_bounds(g, r, opt);
        save_coloring(witness_out, rep.upper_witness);
        report = to_json(rep);
        report["witness_file"] = witness_out;
        report["seed"] = seed;
        report["mode"] = "bounds";
    } else {
        throw std::invalid_argument("unknown mode '" + mode + "'");
    }
    std::cout << report.dump(2) << '\n';
    write_json(report, out);
    return 0;
}

int run_verify(const std::string& nrange, int r, int trials, std::uint64_t seed, int base_vertex,
               bool all_x, int probe_n, const std::string& out) {
    VerifyOptions opt;
    opt.ns = parse_range(nrange);
    opt.r = r;
    opt.trials = trials;
    opt.seed = seed;
    opt.base_vertex = base_vertex;
    opt.all_x = all_x;
    for (int n : opt.ns)
        if (n < r) throw std::invalid_argument("verify: need n >= r for K_n^r");

    auto rep = verify_theorem(opt, &std::cout);
    nlohmann::json j = to_json(rep, opt);

    if (probe_n > 0) {
        auto cert = endgame_probe(probe_n, r);
        std::cout << "endgame probe on K_" << probe_n << "^" << r << ": branch "
                  << branch_name(cert.branch) << ", certificate size " << cert.size << "\n";
        j["endgame_probe"] = to_json(cert);
        if (cert.branch != CertificateBranch::Endgame) {
            std::cout << "endgame probe failed to reach the overlapping-deficiency branch\n";
            write_json(j, out);
            return 1;
        }
    }
    write_json(j, out);
    std::cout << (rep.ok ? "verify: all certificates meet the bound\n"
                         : "verify: FAILURES present\n");
    return rep.ok ? 0 : 1;
}

int run_scan(const std::string& spec_path, const std::string& out_csv) {
    std::ifstream f(spec_path);
    if (!f) throw std::invalid_argument("cannot open scan spec: " + spec_path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("scan spec parse error: ") + e.what());
    }
    ScanSpec spec = parse_scan_spec(j);
    auto rows = run_scan(spec, &std::cout);
    std::ofstream csv(out_csv);
    if (!csv) throw std::invalid_argument("cannot open for writing: " + out_csv);
    write_scan_csv(csv, rows);
    std::cout << "wrote " << rows.size() << " rows to " << out_csv << '\n';
    return 0;
}

int run_degrees(const std::string& file, int l, int shadow_r, const std::string& out,
                bool one_indexed) {
    Hypergraph g = load_hypergraph(file, &std::cerr);
    auto md = min_degree(g, l);
    std::cout << "n=" << g.n << " k=" << g.k << " m=" << g.edge_count() << "\n";
    std::cout << "min " << l << "-degree: " << md.value << " at "
              << fmt_vertices(md.witness, one_indexed) << "\n";
    if (shadow_r > 0) {
        Hypergraph s = shadow(g, shadow_r);
        if (out.empty()) throw std::invalid_argument("--shadow needs --out for the result");
        save_hypergraph(out, s);
        std::cout << "wrote " << shadow_r << "-shadow (" << s.edge_count() << " edges) to "
                  << out << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monochromatic-component toolkit for k-uniform hypergraph colorings"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand(
        "gen", "generate a named construction (hypergraph + coloring + stats)");
    std::string gen_name, gen_out = "construction";
    int gen_n = 0, gen_r = 3, gen_q = 2, gen_m = 1, gen_k = 2;
    bool one_indexed = false;
    gen->add_option("construction", gen_name,
                    "one of: gyarfas-partition, extremal-example, affine-plane, complete")
        ->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--r", gen_r, "uniformity parameter of the construction");
    gen->add_option("--q", gen_q, "affine plane order (prime)");
    gen->add_option("--m", gen_m, "affine plane block size");
    gen->add_option("--k", gen_k, "uniformity (complete only)");
    gen->add_option("--out", gen_out, "output path prefix");
    gen->add_flag("--one-indexed", one_indexed, "display vertices 1-indexed");

    // mc
    auto* mc = app.add_subcommand("mc", "compute mc_r of a hypergraph file");
    std::string mc_file, mc_mode = "bounds", mc_out, mc_witness;
    int mc_r_colors = 0, mc_restarts = 20, mc_workers = 1;
    std::int64_t mc_budget = env_node_budget(), mc_iterations = 100000;
    double mc_time = -1.0;
    std::uint64_t mc_seed = 1;
    bool mc_try_exact = false;
    auto* mc_seed_opt = mc->add_option("--seed", mc_seed, "rng seed (required for heuristic/bounds)");
    mc->add_option("--file", mc_file, "hypergraph file")->required();
    mc->add_option("--r", mc_r_colors, "number of colors")->required();
    mc->add_option("--mode", mc_mode, "brute | exact | heuristic | bounds");
    mc->add_option("--budget-nodes", mc_budget,
                   "node budget for exact search (default: MCHYPER_NODE_BUDGET or unlimited)");
    mc->add_option("--time-limit", mc_time, "wall-clock limit in seconds for exact search");
    mc->add_option("--iterations", mc_iterations, "hill-climb iterations per restart");
    mc->add_option("--restarts", mc_restarts, "hill-climb restarts");
    mc->add_option("--workers", mc_workers, "worker threads for exact search");
    mc->add_option("--out", mc_out, "write the JSON report here as well");
    mc->add_option("--witness-out", mc_witness, "witness coloring path");
    mc->add_flag("--try-exact", mc_try_exact, "bounds mode: also run the exact solver");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "run the codegree theorem's constructive argument on random colorings");
    std::string v_range, v_out;
    int v_r = 3, v_trials = 100, v_base = 0, v_probe = 0;
    std::uint64_t v_seed = 0;
    bool v_all_x = false;
    verify->add_option("--n", v_range, "vertex counts, e.g. 8..12 or 9")->required();
    verify->add_option("--r", v_r, "uniformity (colorings use r+1 colors)");
    verify->add_option("--trials", v_trials, "random colorings per n");
    verify->add_option("--seed", v_seed, "rng seed")->required();
    verify->add_option("--base-vertex", v_base, "base vertex for the argument");
    verify->add_flag("--all-x", v_all_x, "run the argument from every base vertex");
    verify->add_option("--endgame-probe", v_probe,
                       "also run a targeted overlapping-deficiency coloring on K_n^r");
    verify->add_option("--out", v_out, "write the JSON report here");

    // scan
    auto* scan = app.add_subcommand("scan", "parameter sweep to CSV");
    std::string s_spec, s_out = "scan.csv";
    scan->add_option("--spec", s_spec, "JSON scan specification")->required();
    scan->add_option("--out", s_out, "output CSV path")->required();

    // degrees
    auto* degrees = app.add_subcommand("degrees", "minimum l-degree and shadow utilities");
    std::string d_file, d_out;
    int d_l = 1, d_shadow = 0;
    degrees->add_option("--file", d_file, "hypergraph file")->required();
    degrees->add_option("--l", d_l, "degree level");
    degrees->add_option("--shadow", d_shadow, "write the r-shadow for this r");
    degrees->add_option("--out", d_out, "output path for the shadow");
    degrees->add_flag("--one-indexed", one_indexed, "display vertices 1-indexed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return run_gen(gen_name, gen_n, gen_r, gen_q, gen_m, gen_k, gen_out, one_indexed);
        if (mc->parsed())
            return run_mc(mc_file, mc_r_colors, mc_mode, mc_budget, mc_time, mc_seed,
                          mc_seed_opt->count() > 0, mc_iterations, mc_restarts, mc_workers,
                          mc_out, mc_witness, mc_try_exact);
        if (verify->parsed())
            return run_verify(v_range, v_r, v_trials, v_seed, v_base, v_all_x, v_probe, v_out);
        if (scan->parsed()) return run_scan(s_spec, s_out);
        if (degrees->parsed()) return run_degrees(d_file, d_l, d_shadow, d_out, one_indexed);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const TheoremViolation& e) {
        std::cerr << "VIOLATION: " << e.what() << '\n';
        return 1;
    } catch (const SelfCheckError& e) {
        std::cerr << "self-check failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
