#pragma once

#include <json.hpp>

#include "mchyper/constructions.hpp"
#include "mchyper/solver.hpp"
#include "mchyper/verify.hpp"
#include "mchyper/witness.hpp"

namespace mchyper {

// JSON views of the report types. Key sets are part of the CLI contract and
// stay stable.

inline nlohmann::json to_json(const ComponentCertificate& cert) {
    nlohmann::json j;
    j["color"] = cert.color;
    j["size"] = cert.size;
    j["vertices"] = cert.vertices;
    j["branch"] = branch_name(cert.branch);
    if (cert.branch == CertificateBranch::SmallDeficiency) {
        j["small_deficiency_color"] = cert.branch_color;
        j["relabeling"] = nlohmann::json::array();
    } else {
        j["relabeling"] = cert.relabeling;
        j["majority_color"] = cert.majority_color;
    }
    auto arr = nlohmann::json::array();
    for (const auto& a : cert.assertions)
        arr.push_back({{"name", a.name}, {"indices", a.indices}, {"pass", a.pass}});
    j["assertions"] = arr;
    j["base_vertex"] = cert.base_vertex;
    return j;
}

inline nlohmann::json to_json(const ClaimReport& rep) {
    nlohmann::json j;
    j["applicable"] = rep.applicable;
    j["all_pass"] = rep.all_pass;
    auto arr = nlohmann::json::array();
    for (const auto& c : rep.checks)
        arr.push_back({{"claim", c.claim}, {"indices", c.indices}, {"pass", c.pass}});
    j["checks"] = arr;
    return j;
}

inline nlohmann::json to_json(const ExactResult& res, const std::string& witness_file,
                              std::uint64_t seed) {
    return nlohmann::json{{"value", res.value},
                          {"complete", res.complete},
                          {"nodes_explored", res.nodes_explored},
                          {"witness_file", witness_file},
                          {"seed", seed},
                          {"budget", {{"max_nodes", res.node_budget}, {"workers", res.workers}}}};
}

inline nlohmann::json to_json(const HeuristicResult& res, const std::string& witness_file,
                              std::int64_t iterations, int restarts) {
    return nlohmann::json{{"value", res.value},
                          {"complete", false},
                          {"iterations_used", res.iterations},
                          {"witness_file", witness_file},
                          {"seed", res.seed},
                          {"budget", {{"iterations", iterations}, {"restarts", restarts}}}};
}

inline nlohmann::json to_json(const BoundsReport& rep) {
    nlohmann::json j;
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["lower"] = {{"value", rep.lower}, {"kind", rep.lower_kind}};
    j["upper"] = {{"value", rep.upper}, {"kind", rep.upper_kind}};
    j["theorem_applicable"] = rep.theorem_applicable;
    if (rep.min_codegree >= 0) j["min_codegree"] = rep.min_codegree;
    if (rep.exact_value) {
        j["exact"] = {{"value", *rep.exact_value}, {"complete", rep.exact_complete}};
    }
    if (rep.certificate) j["certificate"] = to_json(*rep.certificate);
    if (rep.mc) j["mc"] = *rep.mc;
    j["method"] = rep.method;
    return j;
}

inline nlohmann::json to_json(const VerifyReport& rep, const VerifyOptions& opt) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"n", row.n},
                        {"bound", row.bound},
                        {"certificates", row.certificates},
                        {"failures", row.failures},
                        {"min_certificate", row.min_certificate},
                        {"small_deficiency", row.small_deficiency},
                        {"endgame", row.endgame}});
    return nlohmann::json{{"r", opt.r},
                          {"trials", opt.trials},
                          {"seed", opt.seed},
                          {"rows", rows},
                          {"certificates", rep.certificates},
                          {"failures", rep.failures},
                          {"small_deficiency", rep.small_deficiency},
                          {"endgame", rep.endgame},
                          {"ok", rep.ok}};
}

inline nlohmann::json construction_stats_json(const std::string& name, const ConstructionOutput& out) {
    auto recomputed_delta = min_degree(out.hypergraph, out.claimed.min_degree_level);
    auto recomputed_comp = largest_mono_component(out.hypergraph, out.coloring);
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : out.scheme.parts) parts.push_back(p.size());
    return nlohmann::json{
        {"construction", name},
        {"n", out.hypergraph.n},
        {"k", out.hypergraph.k},
        {"m", out.hypergraph.edge_count()},
        {"colors", out.coloring.r},
        {"part_sizes", parts},
        {"claimed",
         {{"min_degree_level", out.claimed.min_degree_level},
          {"min_degree", out.claimed.min_degree},
          {"largest_component", out.claimed.largest_component}}},
        {"recomputed",
         {{"min_degree", recomputed_delta.value},
          {"min_degree_witness", recomputed_delta.witness},
          {"largest_component", recomputed_comp.size},
          {"largest_component_color", recomputed_comp.color}}},
        {"checks_passed", recomputed_delta.value == out.claimed.min_degree &&
                              recomputed_comp.size == out.claimed.largest_component}};
}

} // namespace mchyper
