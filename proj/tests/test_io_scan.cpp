#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "mchyper/constructions.hpp"
#include "mchyper/io.hpp"
#include "mchyper/sampling.hpp"
#include "mchyper/scan.hpp"
#include "mchyper/verify.hpp"

using namespace mchyper;

TEST_CASE("hypergraph files round-trip byte-identically") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto g = random_hypergraph(9, 3, 20, seed);
        std::ostringstream first;
        write_hypergraph(first, g);
        std::istringstream in(first.str());
        auto back = read_hypergraph(in);
        std::ostringstream second;
        write_hypergraph(second, back);
        REQUIRE(first.str() == second.str());
    }
}

TEST_CASE("coloring files round-trip") {
    auto chi = random_coloring(15, 4, 9);
    std::ostringstream out;
    write_coloring(out, chi);
    std::istringstream in(out.str());
    auto back = read_coloring(in);
    CHECK(back.r == chi.r);
    CHECK(back.colors == chi.colors);
}

TEST_CASE("the reader canonicalizes and warns") {
    std::istringstream in("4 2 3\n1 0\n2 3\n0 1\n"); // unsorted edge, duplicate
    std::ostringstream warn;
    auto g = read_hypergraph(in, &warn);
    CHECK(g.edges == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(warn.str().find("canonicalized") != std::string::npos);

    std::istringstream bad("3 2 1\n0 5\n");
    CHECK_THROWS_AS(read_hypergraph(bad), std::invalid_argument);
    std::istringstream truncated("4 2 3\n0 1\n");
    CHECK_THROWS_AS(read_hypergraph(truncated), std::invalid_argument);
    std::istringstream badcol("3 2\n0\n2\n1\n");
    CHECK_THROWS_AS(read_coloring(badcol), std::invalid_argument);
}

TEST_CASE("scan: complete family closes via theorem plus construction") {
    ScanSpec spec;
    spec.family = "complete";
    spec.ns = {8, 9};
    spec.k = 3;
    spec.colors = 4;
    spec.l = 2;
    spec.seed = 42;
    spec.seed_set = true;
    spec.iterations = 20000;
    spec.restarts = 5;
    auto rows = run_scan(spec);
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        CHECK(row.delta == row.n - 2); // codegree of K_n^3
        CHECK(row.mc_lower == ceil_div(3 * row.n, 4));
        CHECK(row.mc_upper == row.mc_lower);
        CHECK(row.method == "theorem+construction");
    }
}

TEST_CASE("scan: extremal-example family reproduces the claimed parameters") {
    ScanSpec spec;
    spec.family = "extremal-example";
    spec.ns = {10, 13};
    spec.k = 3; // construction parameter r
    spec.seed = 1;
    spec.seed_set = true;
    spec.iterations = 20000;
    spec.restarts = 5;
    auto rows = run_scan(spec);
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        CHECK(row.delta == ceil_div(3 * row.n, 4) - 3);
        CHECK(row.mc_upper == ceil_div(3 * row.n, 4) - 1);
        CHECK(row.mc_lower <= row.mc_upper);
    }
}

TEST_CASE("scan: random-min-degree family honors the degree floor and the seed") {
    ScanSpec spec;
    spec.family = "random-min-degree";
    spec.ns = {8};
    spec.k = 3;
    spec.colors = 4;
    spec.l = 2;
    spec.seed = 17;
    spec.seed_set = true;
    spec.delta_targets = {4};
    spec.edge_budget = 25;
    spec.iterations = 5000;
    spec.restarts = 3;
    auto rows = run_scan(spec);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].delta >= 4);
    CHECK(rows[0].mc_lower <= rows[0].mc_upper);

    auto again = run_scan(spec);
    CHECK(again[0].delta == rows[0].delta);
    CHECK(again[0].mc_lower == rows[0].mc_lower);
    CHECK(again[0].mc_upper == rows[0].mc_upper);
    CHECK(again[0].seed == rows[0].seed);
}

TEST_CASE("scan csv has the fixed column order; empty grids give a bare header") {
    std::ostringstream os;
    write_scan_csv(os, {});
    CHECK(os.str() == "n,r,k,l,delta,mc_lower,mc_upper,method,seed,runtime_ms\n");
}

TEST_CASE("scan spec parsing") {
    auto spec = parse_scan_spec(nlohmann::json::parse(
        R"({"family":"complete","n":{"from":8,"to":10},"k":3,"seed":1})"));
    CHECK(spec.ns == std::vector<int>{8, 9, 10});
    CHECK(spec.colors == 4); // defaults to k+1
    CHECK(spec.l == 2);      // defaults to k-1

    CHECK_THROWS_AS(parse_scan_spec(nlohmann::json::parse(R"({"n":[4]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_scan_spec(nlohmann::json::parse(
                        R"({"family":"nope","n":[4],"seed":1})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_scan_spec(nlohmann::json::parse(
                        R"({"family":"complete","n":[4]})")),
                    std::invalid_argument); // seed required
    CHECK_THROWS_AS(parse_scan_spec(nlohmann::json::parse(
                        R"({"family":"random-min-degree","n":[8],"seed":1})")),
                    std::invalid_argument); // needs delta_targets
}

TEST_CASE("random_min_degree_subhypergraph keeps the constraint") {
    auto g = random_min_degree_subhypergraph(8, 3, 2, 4, 1000, 5);
    CHECK(min_degree(g, 2).value >= 4);
    CHECK(g.edge_count() < binomial(8, 3)); // something was actually deleted
    // deleting any further edge would break the constraint or the pool is empty
    auto again = random_min_degree_subhypergraph(8, 3, 2, 4, 1000, 5);
    CHECK(again.edges == g.edges); // deterministic
}

TEST_CASE("verify_theorem campaign smoke run") {
    VerifyOptions opt;
    opt.ns = {8, 9};
    opt.r = 3;
    opt.trials = 25;
    opt.seed = 42;
    std::ostringstream log;
    auto rep = verify_theorem(opt, &log);
    CHECK(rep.ok);
    CHECK(rep.certificates == 50);
    CHECK(rep.failures == 0);
    CHECK(rep.small_deficiency + rep.endgame == rep.certificates);
    CHECK(log.str().find("n=8") != std::string::npos);
}
