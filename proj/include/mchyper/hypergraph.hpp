#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mchyper/bitset.hpp"
#include "mchyper/combinatorics.hpp"
#include "mchyper/union_find.hpp"

namespace mchyper {

// k-uniform hypergraph on vertices 0..n-1. Edges are strictly increasing
// k-tuples, stored lexicographically sorted with no duplicates (canonical
// order); every coloring and file format refers to edges by that order.
struct Hypergraph {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

// r available colors 0..r-1; colors[i] is the color of edge i in canonical
// order. Colors may be unused.
struct EdgeColoring {
    int r = 0;
    std::vector<int> colors;
};

// One monochromatic component. A vertex incident to no edge of the color is
// its own trivial component, materialized explicitly.
struct ComponentSet {
    int color = 0;
    std::vector<int> vertices; // sorted
    bool is_trivial = false;
};

inline Hypergraph make_hypergraph(int n, int k, std::vector<std::vector<int>> edges) {
    if (n < 1) throw std::invalid_argument("make_hypergraph: need n >= 1");
    if (k < 2) throw std::invalid_argument("make_hypergraph: need uniformity k >= 2");
    for (auto& e : edges) {
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("make_hypergraph: edge of size " +
                                        std::to_string(e.size()) + ", expected " +
                                        std::to_string(k));
        std::sort(e.begin(), e.end());
        for (int i = 0; i < k; ++i) {
            if (e[i] < 0 || e[i] >= n)
                throw std::invalid_argument("make_hypergraph: vertex " + std::to_string(e[i]) +
                                            " out of range [0," + std::to_string(n) + ")");
            if (i > 0 && e[i] == e[i - 1])
                throw std::invalid_argument("make_hypergraph: repeated vertex " +
                                            std::to_string(e[i]) + " in edge");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph{n, k, std::move(edges)};
}

inline Hypergraph complete_hypergraph(int n, int k) {
    if (k < 2 || n < k)
        throw std::invalid_argument("complete_hypergraph: need n >= k >= 2");
    std::int64_t m = binomial(n, k);
    if (m > 5'000'000)
        throw std::invalid_argument("complete_hypergraph: C(n,k) too large to materialize");
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for_each_combination(n, k, [&](std::span<const int> c) {
        edges.emplace_back(c.begin(), c.end());
    });
    return Hypergraph{n, k, std::move(edges)}; // combinations come out canonical
}

inline void require_consistent(const Hypergraph& g, const EdgeColoring& chi) {
    if (static_cast<int>(chi.colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring length " + std::to_string(chi.colors.size()) +
                                    " does not match edge count " +
                                    std::to_string(g.edge_count()));
    if (chi.r < 1) throw std::invalid_argument("coloring needs r >= 1");
    for (int c : chi.colors)
        if (c < 0 || c >= chi.r)
            throw std::invalid_argument("edge color " + std::to_string(c) +
                                        " outside [0," + std::to_string(chi.r) + ")");
}

inline EdgeColoring make_coloring(const Hypergraph& g, int r, std::vector<int> colors) {
    EdgeColoring chi{r, std::move(colors)};
    require_consistent(g, chi);
    return chi;
}

// |{e in E(G) : S subseteq e}|. S given as a set of distinct vertices.
inline std::int64_t degree_of_set(const Hypergraph& g, std::span<const int> s) {
    if (static_cast<int>(s.size()) > g.k)
        throw std::invalid_argument("degree_of_set: |S| exceeds uniformity");
    std::vector<int> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.n)
            throw std::invalid_argument("degree_of_set: vertex out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("degree_of_set: repeated vertex in S");
    }
    std::int64_t deg = 0;
    for (const auto& e : g.edges)
        if (std::includes(e.begin(), e.end(), sorted.begin(), sorted.end())) ++deg;
    return deg;
}

struct MinDegreeResult {
    std::int64_t value = 0;
    std::vector<int> witness; // lexicographically smallest attaining set
};

// Minimum l-degree with witness. Ties break to the lexicographically
// smallest l-set.
inline MinDegreeResult min_degree(const Hypergraph& g, int l) {
    if (l < 0 || l > g.k || l > g.n)
        throw std::invalid_argument("min_degree: need 0 <= l <= k and l <= n");
    if (l == 0) return {static_cast<std::int64_t>(g.edge_count()), {}};
    // Count, per l-subset of [n], how many edges contain it; colex rank indexes
    // the counter array.
    std::vector<std::int64_t> cnt(static_cast<std::size_t>(binomial(g.n, l)), 0);
    std::vector<int> sub(l);
    for (const auto& e : g.edges) {
        for_each_combination(g.k, l, [&](std::span<const int> pick) {
            for (int i = 0; i < l; ++i) sub[i] = e[pick[i]];
            ++cnt[colex_rank(sub)];
        });
    }
    MinDegreeResult best;
    best.value = -1;
    for_each_combination(g.n, l, [&](std::span<const int> s) {
        std::int64_t d = cnt[colex_rank(s)];
        if (best.value < 0 || d < best.value) {
            best.value = d;
            best.witness.assign(s.begin(), s.end());
        }
    });
    return best;
}

// r-uniform hypergraph on the same vertices whose edges are the r-subsets
// contained in some edge of g.
inline Hypergraph shadow(const Hypergraph& g, int r) {
    if (r < 2 || r > g.k)
        throw std::invalid_argument("shadow: need 2 <= r <= k");
    if (r == g.k) return g;
    std::vector<std::vector<int>> out;
    std::vector<int> sub(r);
    for (const auto& e : g.edges) {
        for_each_combination(g.k, r, [&](std::span<const int> pick) {
            for (int i = 0; i < r; ++i) sub[i] = e[pick[i]];
            out.push_back(sub);
        });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Hypergraph{g.n, r, std::move(out)};
}

namespace detail {

// Union-find pass over the color-c edges. touched[v] marks vertices lying on
// at least one color-c edge.
inline void color_union(const Hypergraph& g, const EdgeColoring& chi, int c,
                        UnionFind& uf, std::vector<char>& touched) {
    for (int i = 0; i < g.edge_count(); ++i) {
        if (chi.colors[i] != c) continue;
        const auto& e = g.edges[i];
        touched[e[0]] = 1;
        for (int j = 1; j < g.k; ++j) {
            touched[e[j]] = 1;
            uf.unite(e[0], e[j]);
        }
    }
}

} // namespace detail

// Connected components of the color-c subhypergraph, as a partition of
// [0,n): untouched vertices appear as trivial singleton components.
// Components are ordered by their smallest vertex.
inline std::vector<ComponentSet> color_components(const Hypergraph& g, const EdgeColoring& chi,
                                                  int c) {
    require_consistent(g, chi);
    if (c < 0 || c >= chi.r) throw std::invalid_argument("color_components: color out of range");
    UnionFind uf(g.n);
    std::vector<char> touched(g.n, 0);
    detail::color_union(g, chi, c, uf, touched);

    std::vector<int> root_comp(g.n, -1);
    std::vector<ComponentSet> comps;
    for (int v = 0; v < g.n; ++v) {
        if (!touched[v]) {
            comps.push_back(ComponentSet{c, {v}, true});
            continue;
        }
        int root = uf.find(v);
        if (root_comp[root] < 0) {
            root_comp[root] = static_cast<int>(comps.size());
            comps.push_back(ComponentSet{c, {}, false});
        }
        comps[root_comp[root]].vertices.push_back(v);
    }
    // vertices were visited in ascending order, so each component is sorted
    // and components are already ordered by smallest vertex
    return comps;
}

struct LargestComponent {
    int size = 0;
    int color = 0;
    std::vector<int> vertices;
};

// Maximum component order over all colors. Ties break to the smallest color,
// then to the lexicographically smallest vertex set.
inline LargestComponent largest_mono_component(const Hypergraph& g, const EdgeColoring& chi) {
    require_consistent(g, chi);
    LargestComponent best;
    for (int c = 0; c < chi.r; ++c) {
        for (auto& comp : color_components(g, chi, c)) {
            int sz = static_cast<int>(comp.vertices.size());
            if (sz > best.size ||
                (sz == best.size && c == best.color && comp.vertices < best.vertices)) {
                best = LargestComponent{sz, c, std::move(comp.vertices)};
            }
        }
    }
    return best;
}

// The (possibly trivial) color-c component containing x.
inline ComponentSet component_of(const Hypergraph& g, const EdgeColoring& chi, int c, int x) {
    require_consistent(g, chi);
    if (c < 0 || c >= chi.r) throw std::invalid_argument("component_of: color out of range");
    if (x < 0 || x >= g.n) throw std::invalid_argument("component_of: vertex out of range");
    UnionFind uf(g.n);
    std::vector<char> touched(g.n, 0);
    detail::color_union(g, chi, c, uf, touched);
    if (!touched[x]) return ComponentSet{c, {x}, true};
    ComponentSet comp{c, {}, false};
    int root = uf.find(x);
    for (int v = 0; v < g.n; ++v)
        if (touched[v] && uf.find(v) == root) comp.vertices.push_back(v);
    return comp;
}

// Same component as a VertexSet; used by the deficiency machinery.
inline VertexSet component_set_of(const Hypergraph& g, const EdgeColoring& chi, int c, int x) {
    VertexSet s(g.n);
    for (int v : component_of(g, chi, c, x).vertices) s.set(v);
    return s;
}

} // namespace mchyper
