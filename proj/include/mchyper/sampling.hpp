#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mchyper/combinatorics.hpp"
#include "mchyper/constructions.hpp"
#include "mchyper/hypergraph.hpp"
#include "mchyper/prng.hpp"

namespace mchyper {

// Uniform color per edge.
inline EdgeColoring random_coloring(int m, int r, std::uint64_t seed) {
    if (m < 0 || r < 1) throw std::invalid_argument("random_coloring: bad parameters");
    std::mt19937_64 rng(seed);
    EdgeColoring chi{r, std::vector<int>(static_cast<std::size_t>(m))};
    for (int i = 0; i < m; ++i) chi.colors[i] = bounded_int(rng, r);
    return chi;
}

// m distinct edges drawn uniformly from all C(n,k) possibilities.
inline Hypergraph random_hypergraph(int n, int k, int m, std::uint64_t seed) {
    std::int64_t total = binomial(n, k);
    if (k < 2 || n < k || m < 0 || m > total)
        throw std::invalid_argument("random_hypergraph: bad parameters");
    std::mt19937_64 rng(seed);
    // Floyd's sampling over combination ranks, then unrank.
    std::vector<std::int64_t> picked;
    for (std::int64_t j = total - m; j < total; ++j) {
        std::int64_t t = static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(j + 1)));
        bool seen = false;
        for (auto p : picked) seen = seen || p == t;
        picked.push_back(seen ? j : t);
    }
    // unrank colex: rank = sum C(v_i, i+1) with v strictly increasing
    std::vector<std::vector<int>> edges;
    for (std::int64_t rank : picked) {
        std::vector<int> e(k);
        std::int64_t rem = rank;
        for (int i = k; i >= 1; --i) {
            int v = i - 1;
            while (binomial(v + 1, i) <= rem) ++v;
            e[i - 1] = v;
            rem -= binomial(v, i);
        }
        edges.push_back(std::move(e));
    }
    return make_hypergraph(n, k, std::move(edges));
}

// Seeded subhypergraph of K_n^k constrained to minimum l-degree >= target:
// repeatedly deletes a uniformly random edge whose removal keeps the
// constraint, until max_deletions edges are gone or no edge is deletable.
inline Hypergraph random_min_degree_subhypergraph(int n, int k, int l, std::int64_t target,
                                                  std::int64_t max_deletions,
                                                  std::uint64_t seed) {
    if (l < 0 || l > k) throw std::invalid_argument("random_min_degree_subhypergraph: bad l");
    Hypergraph g = complete_hypergraph(n, k);
    if (min_degree(g, l).value < target)
        throw std::invalid_argument(
            "random_min_degree_subhypergraph: complete hypergraph already below target");
    std::mt19937_64 rng(seed);

    // degree counter per l-subset, indexed by colex rank
    std::vector<std::int64_t> cnt(static_cast<std::size_t>(binomial(n, l)), 0);
    std::vector<int> sub(l);
    auto bump = [&](const std::vector<int>& e, std::int64_t d) {
        if (l == 0) {
            cnt[0] += d;
            return;
        }
        for_each_combination(k, l, [&](std::span<const int> pick) {
            for (int i = 0; i < l; ++i) sub[i] = e[pick[i]];
            cnt[colex_rank(sub)] += d;
        });
    };
    for (const auto& e : g.edges) bump(e, 1);

    std::vector<char> alive(g.edges.size(), 1);
    auto deletable = [&](int i) {
        bool ok = true;
        if (l == 0) return cnt[0] > target;
        const auto& e = g.edges[i];
        for_each_combination(k, l, [&](std::span<const int> pick) {
            for (int j = 0; j < l; ++j) sub[j] = e[pick[j]];
            ok = ok && cnt[colex_rank(sub)] > target;
        });
        return ok;
    };

    std::vector<int> pool;
    for (std::int64_t step = 0; step < max_deletions; ++step) {
        pool.clear();
        for (int i = 0; i < g.edge_count(); ++i)
            if (alive[i] && deletable(i)) pool.push_back(i);
        if (pool.empty()) break;
        int pick = pool[bounded_int(rng, static_cast<int>(pool.size()))];
        alive[pick] = 0;
        bump(g.edges[pick], -1);
    }

    std::vector<std::vector<int>> kept;
    for (int i = 0; i < g.edge_count(); ++i)
        if (alive[i]) kept.push_back(g.edges[i]);
    return Hypergraph{n, k, std::move(kept)};
}

// (r+1)-coloring of K_n^r whose deficiency sets at vertex 0 are all larger
// than n/(r+1), so the constructive argument must take its overlapping-
// deficiency branch. Blocks B_0..B_{r-1} partition {1..n-1}; edges through 0
// take the smallest color whose block they avoid, everything else takes the
// last color. Then F_i = B_i for i < r and F_r = V \ {0}. Feasible only when
// r*(floor(n/(r+1))+1) <= n-1; in particular no such coloring exists when
// r+1 divides n.
inline EdgeColoring overlapping_deficiency_coloring(const Hypergraph& g) {
    const int r = g.k, n = g.n;
    if (r < 3 || g.edge_count() != binomial(n, r))
        throw std::invalid_argument("overlapping_deficiency_coloring: need a complete K_n^r, r >= 3");
    const int need = n / (r + 1) + 1;
    if (static_cast<std::int64_t>(r) * need > n - 1)
        throw std::invalid_argument(
            "overlapping_deficiency_coloring: infeasible, r*(floor(n/(r+1))+1) > n-1 for n=" +
            std::to_string(n));
    std::vector<int> block(n, -1);
    auto parts = balanced_partition(n - 1, r); // sizes >= (n-1)/r >= need
    for (int b = 0; b < r; ++b)
        for (int v : parts[b]) block[v + 1] = b;

    EdgeColoring chi{r + 1, std::vector<int>(g.edges.size())};
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (e[0] != 0) {
            chi.colors[i] = r;
            continue;
        }
        unsigned met = 0;
        for (int j = 1; j < r; ++j) met |= 1u << block[e[j]];
        chi.colors[i] = __builtin_ctz(~met); // smallest block the edge avoids
    }
    return chi;
}

} // namespace mchyper
