#include <catch2/catch_amalgamated.hpp>

#include "mchyper/constructions.hpp"
#include "mchyper/hypergraph.hpp"
#include "mchyper/sampling.hpp"
#include "support/oracles.hpp"

using namespace mchyper;

TEST_CASE("make_hypergraph canonicalizes and validates") {
    auto g = make_hypergraph(4, 2, {{1, 0}, {2, 3}});
    CHECK(g.edges == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

    auto dedup = make_hypergraph(3, 3, {{0, 1, 2}, {2, 1, 0}});
    CHECK(dedup.edges == std::vector<std::vector<int>>{{0, 1, 2}});

    CHECK_THROWS_AS(make_hypergraph(3, 2, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hypergraph(3, 2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hypergraph(4, 3, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("complete_hypergraph sizes") {
    CHECK(complete_hypergraph(4, 2).edge_count() == 6);
    CHECK(complete_hypergraph(5, 3).edge_count() == 10);
    CHECK_THROWS_AS(complete_hypergraph(3, 4), std::invalid_argument);
}

TEST_CASE("degree_of_set") {
    auto k53 = complete_hypergraph(5, 3);
    std::vector<int> s01{0, 1};
    CHECK(degree_of_set(k53, s01) == 3);
    CHECK(degree_of_set(k53, std::vector<int>{}) == 10);
    std::vector<int> too_big{0, 1, 2, 3};
    CHECK_THROWS_AS(degree_of_set(k53, too_big), std::invalid_argument);

    auto ex = extremal_codegree_example(10, 3);
    for_each_combination(10, 2, [&](std::span<const int> s) {
        CHECK(degree_of_set(ex.hypergraph, s) >= 5); // n-(r-1)-(k+1) = 5
    });
}

TEST_CASE("min_degree values and witnesses") {
    auto md = min_degree(complete_hypergraph(6, 3), 2);
    CHECK(md.value == 4);
    CHECK(md.witness == std::vector<int>{0, 1});

    auto ex = extremal_codegree_example(10, 3);
    auto got = min_degree(ex.hypergraph, 2);
    auto want = oracle::brute_min_degree(ex.hypergraph, 2);
    CHECK(got.value == 5);
    CHECK(got.value == want.first);
    CHECK(got.witness == want.second);

    CHECK_THROWS_AS(min_degree(complete_hypergraph(5, 3), 4), std::invalid_argument);
}

TEST_CASE("min_degree of complete hypergraphs matches the binomial formula") {
    for (int n = 2; n <= 12; ++n)
        for (int k = 2; k <= n; ++k) {
            auto g = complete_hypergraph(n, k);
            for (int l = 0; l <= k; ++l)
                REQUIRE(min_degree(g, l).value == binomial(n - l, k - l));
        }
}

TEST_CASE("shadow") {
    auto k53 = complete_hypergraph(5, 3);
    auto sh = shadow(k53, 2);
    CHECK(sh.k == 2);
    CHECK(sh.edge_count() == 10); // K_5

    auto one = make_hypergraph(4, 3, {{0, 1, 2}});
    CHECK(shadow(one, 2).edges == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

    CHECK(shadow(k53, 3).edges == k53.edges);
    CHECK_THROWS_AS(shadow(k53, 1), std::invalid_argument);
    CHECK_THROWS_AS(shadow(k53, 4), std::invalid_argument);
}

TEST_CASE("shadow composition: shadow(shadow(G,r),r') = shadow(G,r')") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto g = random_hypergraph(8, 4, 12, seed);
        for (int r = 2; r <= 4; ++r)
            for (int rp = 2; rp <= r; ++rp)
                REQUIRE(shadow(shadow(g, r), rp).edges == shadow(g, rp).edges);
    }
}

TEST_CASE("color_components basics") {
    auto k4 = complete_hypergraph(4, 2);
    EdgeColoring mono{2, std::vector<int>(6, 0)};

    auto comps0 = color_components(k4, mono, 0);
    REQUIRE(comps0.size() == 1);
    CHECK(comps0[0].vertices == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(comps0[0].is_trivial);

    auto comps1 = color_components(k4, mono, 1);
    REQUIRE(comps1.size() == 4);
    for (const auto& c : comps1) CHECK(c.is_trivial);

    auto gy = gyarfas_partition_coloring(8, 3);
    int largest = 0;
    for (const auto& c : color_components(gy.hypergraph, gy.coloring, 0))
        largest = std::max(largest, static_cast<int>(c.vertices.size()));
    CHECK(largest == 6); // color 0 avoids the first block {0,1}
}

TEST_CASE("color_components partitions the vertex set and agrees with BFS") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto g = random_hypergraph(9, 3, 14, seed);
        auto chi = random_coloring(g.edge_count(), 3, seed * 77 + 1);
        for (int c = 0; c < 3; ++c) {
            auto comps = color_components(g, chi, c);
            std::vector<int> owner(g.n, -1);
            for (std::size_t ci = 0; ci < comps.size(); ++ci)
                for (int v : comps[ci].vertices) {
                    REQUIRE(owner[v] == -1);
                    owner[v] = static_cast<int>(ci);
                }
            for (int v = 0; v < g.n; ++v) REQUIRE(owner[v] >= 0);

            // every color-c edge sits inside one component
            for (int i = 0; i < g.edge_count(); ++i) {
                if (chi.colors[i] != c) continue;
                int home = owner[g.edges[i][0]];
                for (int v : g.edges[i]) REQUIRE(owner[v] == home);
                REQUIRE_FALSE(comps[home].is_trivial);
            }

            std::vector<std::vector<int>> got;
            for (const auto& comp : comps) got.push_back(comp.vertices);
            auto want = oracle::bfs_color_components(g, chi, c);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            REQUIRE(got == want);
        }
    }
}

TEST_CASE("largest_mono_component") {
    auto k53 = complete_hypergraph(5, 3);
    EdgeColoring mono{3, std::vector<int>(10, 0)};
    auto lc = largest_mono_component(k53, mono);
    CHECK(lc.size == 5);
    CHECK(lc.color == 0);
    CHECK(lc.vertices == std::vector<int>{0, 1, 2, 3, 4});

    auto gy = gyarfas_partition_coloring(8, 3);
    CHECK(largest_mono_component(gy.hypergraph, gy.coloring).size == 6);

    auto ex = extremal_codegree_example(10, 3);
    CHECK(largest_mono_component(ex.hypergraph, ex.coloring).size == 7);
}

TEST_CASE("largest component is n iff some color has a spanning block") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = random_hypergraph(8, 3, 16, seed);
        auto chi = random_coloring(g.edge_count(), 3, seed * 31);
        auto lc = largest_mono_component(g, chi);
        REQUIRE(lc.size >= 1);
        bool spanning = false;
        for (int c = 0; c < chi.r; ++c)
            spanning = spanning || color_components(g, chi, c).size() == 1;
        REQUIRE((lc.size == g.n) == spanning);
    }
}

TEST_CASE("component_of") {
    auto k4 = complete_hypergraph(4, 2);
    EdgeColoring mono{3, std::vector<int>(6, 0)};
    CHECK(component_of(k4, mono, 0, 2).vertices == std::vector<int>{0, 1, 2, 3});

    auto trivial = component_of(k4, mono, 2, 1); // color 2 unused
    CHECK(trivial.is_trivial);
    CHECK(trivial.vertices == std::vector<int>{1});

    auto gy = gyarfas_partition_coloring(8, 3);
    for (int x : gy.scheme.parts[0]) {
        auto comp = component_of(gy.hypergraph, gy.coloring, 0, x);
        CHECK(comp.is_trivial);
        CHECK(comp.vertices == std::vector<int>{x});
    }

    CHECK_THROWS_AS(component_of(k4, mono, 0, 7), std::invalid_argument);
}

TEST_CASE("refinement monotonicity under single-edge recoloring") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = random_hypergraph(9, 3, 15, seed);
        auto chi = random_coloring(g.edge_count(), 3, seed * 13 + 5);
        for (int e = 0; e < g.edge_count(); ++e) {
            int c = chi.colors[e];
            int cp = (c + 1) % chi.r;

            auto max_of_color = [&](const EdgeColoring& col, int color) {
                int best = 0;
                for (const auto& comp : color_components(g, col, color))
                    best = std::max(best, static_cast<int>(comp.vertices.size()));
                return best;
            };
            auto comp_around_edge = [&](const EdgeColoring& col, int color) {
                int best = 0;
                for (int v : g.edges[e])
                    best = std::max(best, static_cast<int>(
                                              component_of(g, col, color, v).vertices.size()));
                return best;
            };

            int before_c = max_of_color(chi, c);
            int before_cp = comp_around_edge(chi, cp);
            EdgeColoring re = chi;
            re.colors[e] = cp;
            REQUIRE(max_of_color(re, c) <= before_c);
            REQUIRE(comp_around_edge(re, cp) >= before_cp);
        }
    }
}
