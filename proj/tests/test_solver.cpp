#include <catch2/catch_amalgamated.hpp>

#include "mchyper/constructions.hpp"
#include "mchyper/sampling.hpp"
#include "mchyper/solver.hpp"

using namespace mchyper;

TEST_CASE("mc_brute on tiny instances") {
    CHECK(mc_brute(complete_hypergraph(4, 2), 3) == 2);  // perfect matchings
    CHECK(mc_brute(complete_hypergraph(4, 3), 3) == 4);  // r-colorings of K_n^r span
    auto one = make_hypergraph(3, 3, {{0, 1, 2}});
    CHECK(mc_brute(one, 2) == 3);

    auto big = complete_hypergraph(8, 2); // 3^28 colorings
    CHECK_THROWS_AS(mc_brute(big, 3), std::invalid_argument);
}

TEST_CASE("mc_exact matches the brute oracle") {
    // spec instance
    auto ex = mc_exact(complete_hypergraph(4, 2), 3);
    CHECK(ex.value == 2);
    CHECK(ex.complete);
    CHECK(largest_mono_component(complete_hypergraph(4, 2), ex.witness).size == 2);

    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        int n = 5 + static_cast<int>(seed % 2);
        int k = 2 + static_cast<int>(seed % 2);
        int m = 4 + static_cast<int>(seed % 5);
        int r = 2 + static_cast<int>(seed % 2);
        auto g = random_hypergraph(n, k, m, seed);
        auto res = mc_exact(g, r);
        REQUIRE(res.complete);
        REQUIRE(res.value == mc_brute(g, r));
        REQUIRE(largest_mono_component(g, res.witness).size == res.value);
    }
}

TEST_CASE("mc_exact on complete 3-uniform instances") {
    auto k53 = complete_hypergraph(5, 3);
    auto res4 = mc_exact(k53, 4);
    CHECK(res4.value == 4); // ceil(15/4)
    CHECK(res4.complete);
    CHECK(res4.value == mc_brute(k53, 4));

    auto res3 = mc_exact(k53, 3);
    CHECK(res3.value == 5);
    CHECK(res3.complete);
}

TEST_CASE("color permutations leave the objective unchanged") {
    auto g = complete_hypergraph(7, 3);
    for (std::uint64_t t = 0; t < 20; ++t) {
        auto chi = random_coloring(g.edge_count(), 4, mix_seed(11, t));
        int base = largest_mono_component(g, chi).size;
        std::vector<int> perm{3, 0, 2, 1};
        EdgeColoring permuted{4, chi.colors};
        for (auto& c : permuted.colors) c = perm[static_cast<std::size_t>(c)];
        REQUIRE(largest_mono_component(g, permuted).size == base);
    }
}

TEST_CASE("mc is monotone in the color count") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto g = random_hypergraph(6, 3, 7, seed);
        int prev = 0;
        for (int r = 4; r >= 2; --r) {
            int v = mc_exact(g, r).value;
            REQUIRE(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("mc is monotone under edge addition") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto big = random_hypergraph(6, 3, 8, seed);
        auto smaller = Hypergraph{6, 3, {big.edges.begin(), big.edges.begin() + 5}};
        for (int r : {2, 3})
            REQUIRE(mc_exact(smaller, r).value <= mc_exact(big, r).value);
    }
}

TEST_CASE("disabling pruning and symmetry reproduces the value") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto g = random_hypergraph(5, 2, 6, seed);
        ExactOptions plain;
        plain.use_pruning = false;
        plain.use_symmetry = false;
        REQUIRE(mc_exact(g, 3, plain).value == mc_exact(g, 3).value);
    }
}

TEST_CASE("exact reports are identical across worker counts") {
    auto check_identical = [](const Hypergraph& g, int r) {
        ExactOptions one, four;
        one.workers = 1;
        four.workers = 4;
        one.max_nodes = four.max_nodes = 10'000'000;
        auto a = mc_exact(g, r, one);
        auto b = mc_exact(g, r, four);
        REQUIRE(a.value == b.value);
        REQUIRE(a.nodes_explored == b.nodes_explored);
        REQUIRE(a.complete == b.complete);
        REQUIRE(a.witness.colors == b.witness.colors);
    };
    check_identical(complete_hypergraph(4, 2), 3);
    check_identical(complete_hypergraph(5, 3), 4);
    check_identical(random_hypergraph(6, 3, 9, 3), 3);
}

TEST_CASE("node budget exhaustion is reported honestly") {
    ExactOptions opt;
    opt.max_nodes = 3;
    auto res = mc_exact(complete_hypergraph(5, 2), 3, opt);
    CHECK_FALSE(res.complete);
    // the value is still a witnessed upper bound
    CHECK(largest_mono_component(complete_hypergraph(5, 2), res.witness).size == res.value);
}

TEST_CASE("mc_heuristic reaches known optima") {
    auto h_k4 = mc_heuristic(complete_hypergraph(4, 2), 3, 10000, 10, 1);
    CHECK(h_k4.value == 2);
    CHECK(largest_mono_component(complete_hypergraph(4, 2), h_k4.witness).size == 2);

    auto k83 = complete_hypergraph(8, 3);
    auto h_k83 = mc_heuristic(k83, 4, 100000, 20, 7);
    CHECK(h_k83.value == 6); // ceil(24/4), optimal by the codegree theorem
    CHECK(largest_mono_component(k83, h_k83.witness).size == 6);

    auto ex = extremal_codegree_example(10, 3);
    auto h_ex = mc_heuristic(ex.hypergraph, 4, 100000, 20, 3);
    CHECK(h_ex.value <= 7); // the construction coloring attains 7
    CHECK(largest_mono_component(ex.hypergraph, h_ex.witness).size == h_ex.value);
}

TEST_CASE("mc_heuristic is deterministic given its seed") {
    auto g = complete_hypergraph(7, 3);
    auto a = mc_heuristic(g, 4, 2000, 3, 99);
    auto b = mc_heuristic(g, 4, 2000, 3, 99);
    CHECK(a.value == b.value);
    CHECK(a.witness.colors == b.witness.colors);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("mc_bounds closes K_12^3 with 4 colors via theorem plus construction") {
    auto rep = mc_bounds(complete_hypergraph(12, 3), 4, BoundsOptions{.seed = 5});
    CHECK(rep.lower == 9);
    CHECK(rep.lower_kind == "theorem");
    CHECK(rep.upper == 9);
    CHECK(rep.mc.has_value());
    CHECK(*rep.mc == 9);
    CHECK(rep.method == "theorem+construction");
    REQUIRE(rep.certificate.has_value());
    CHECK(rep.certificate->size >= 9);
}

TEST_CASE("mc_bounds reports the theorem as inapplicable below the threshold") {
    auto ex = extremal_codegree_example(13, 3);
    auto rep = mc_bounds(ex.hypergraph, 4, BoundsOptions{.seed = 5});
    CHECK_FALSE(rep.theorem_applicable);
    CHECK(rep.min_codegree == 7);
    CHECK(rep.upper <= 9); // the construction coloring attains ceil(39/4)-1 = 9
    CHECK(rep.lower <= rep.upper);
    CHECK(rep.method == "heuristic");
}

TEST_CASE("mc_bounds with the exact solver pins small instances") {
    BoundsOptions opt;
    opt.seed = 2;
    opt.try_exact = true;
    auto rep = mc_bounds(complete_hypergraph(4, 3), 3, opt);
    CHECK(rep.mc.has_value());
    CHECK(*rep.mc == 4);
    CHECK(rep.method == "exact");
}
