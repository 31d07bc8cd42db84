#pragma once

// Test-only independent oracles. These deliberately avoid the library's
// union-find and counter-array code paths: components come from BFS over an
// explicit adjacency structure, degrees from direct subset scans.

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "mchyper/hypergraph.hpp"

namespace oracle {

// Connected components of the color-c subhypergraph via BFS on the
// vertex-edge incidence graph; trivial singletons included.
inline std::vector<std::vector<int>> bfs_color_components(const mchyper::Hypergraph& g,
                                                          const mchyper::EdgeColoring& chi,
                                                          int c) {
    std::vector<std::vector<int>> vertex_edges(g.n);
    for (int i = 0; i < g.edge_count(); ++i)
        if (chi.colors[i] == c)
            for (int v : g.edges[i]) vertex_edges[v].push_back(i);

    std::vector<char> seen_v(g.n, 0), seen_e(g.edges.size(), 0);
    std::vector<std::vector<int>> comps;
    for (int start = 0; start < g.n; ++start) {
        if (seen_v[start]) continue;
        std::vector<int> comp;
        std::queue<int> work;
        work.push(start);
        seen_v[start] = 1;
        while (!work.empty()) {
            int v = work.front();
            work.pop();
            comp.push_back(v);
            for (int ei : vertex_edges[v]) {
                if (seen_e[ei]) continue;
                seen_e[ei] = 1;
                for (int u : g.edges[ei])
                    if (!seen_v[u]) {
                        seen_v[u] = 1;
                        work.push(u);
                    }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline int bfs_largest_component(const mchyper::Hypergraph& g, const mchyper::EdgeColoring& chi) {
    int best = 0;
    for (int c = 0; c < chi.r; ++c)
        for (const auto& comp : bfs_color_components(g, chi, c))
            best = std::max(best, static_cast<int>(comp.size()));
    return best;
}

inline std::vector<int> bfs_component_of(const mchyper::Hypergraph& g,
                                         const mchyper::EdgeColoring& chi, int c, int x) {
    for (auto& comp : bfs_color_components(g, chi, c))
        if (std::binary_search(comp.begin(), comp.end(), x)) return comp;
    return {};
}

// Direct minimum l-degree: for every l-set scan all edges.
inline std::pair<std::int64_t, std::vector<int>> brute_min_degree(const mchyper::Hypergraph& g,
                                                                  int l) {
    std::int64_t best = -1;
    std::vector<int> witness;
    mchyper::for_each_combination(g.n, l, [&](std::span<const int> s) {
        std::int64_t d = 0;
        for (const auto& e : g.edges)
            if (std::includes(e.begin(), e.end(), s.begin(), s.end())) ++d;
        if (best < 0 || d < best) {
            best = d;
            witness.assign(s.begin(), s.end());
        }
    });
    if (l == 0) return {g.edge_count(), {}};
    return {best, witness};
}

// Independent re-derivation of the codegree example's deletion rule. With
// T = pairs where the edge meets both A_i and X_i, XO = X-only, AO = A-only,
// N = neither (indices i in [r]; the last A block plays no role), the edge is
// deleted iff N is empty and the forced sides can be completed to a
// partition with both sides nonempty.
inline bool survives_deletion(const std::vector<int>& edge, const std::vector<int>& owner, int r) {
    int t = 0, xo = 0, ao = 0;
    std::vector<char> a_met(r, 0), x_met(r, 0);
    for (int v : edge) {
        int p = owner[v];
        if (p < r) a_met[p] = 1;          // A_1..A_r
        else if (p > r) x_met[p - r - 1] = 1; // X_1..X_r (p == r is A_{r+1})
    }
    for (int i = 0; i < r; ++i) {
        if (a_met[i] && x_met[i]) ++t;
        else if (x_met[i]) ++xo;
        else if (a_met[i]) ++ao;
        else return true; // some index on neither side: no partition works
    }
    bool deletable = (xo > 0 && ao > 0) || ((xo > 0 || ao > 0) && t > 0) || t >= 2;
    return !deletable;
}

} // namespace oracle
