#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mchyper/combinatorics.hpp"
#include "mchyper/hypergraph.hpp"

namespace mchyper {

// Thrown when a generator's recomputed parameters disagree with what the
// construction is supposed to guarantee; indicates a bug, not bad input.
struct SelfCheckError : std::logic_error {
    using std::logic_error::logic_error;
};

// Disjoint vertex blocks covering [0,n). The first num_a parts play the
// "avoided set" role A_1..A_{r+1}; the next num_x parts are the X_1..X_r
// pair-blocks of the codegree-extremal example (zero for other generators).
struct PartitionScheme {
    std::vector<std::vector<int>> parts;
    int num_a = 0;
    int num_x = 0;
};

struct ConstructionStats {
    int min_degree_level = 0;           // the l at which min degree is claimed
    std::int64_t min_degree = 0;        // claimed delta_l
    int largest_component = 0;          // claimed largest monochromatic component
};

struct ConstructionOutput {
    Hypergraph hypergraph;
    EdgeColoring coloring;
    PartitionScheme scheme;
    ConstructionStats claimed;
};

// Splits [0,n) into t contiguous ascending blocks whose sizes differ by at
// most 1, larger blocks first.
inline std::vector<std::vector<int>> balanced_partition(int n, int t) {
    if (t < 1 || t > n)
        throw std::invalid_argument("balanced_partition: need 1 <= t <= n");
    std::vector<std::vector<int>> parts(t);
    int base = n / t, rem = n % t, v = 0;
    for (int i = 0; i < t; ++i) {
        int sz = base + (i < rem ? 1 : 0);
        parts[i].resize(sz);
        std::iota(parts[i].begin(), parts[i].end(), v);
        v += sz;
    }
    return parts;
}

namespace detail {

inline std::vector<int> part_of_vertex(int n, const std::vector<std::vector<int>>& parts) {
    std::vector<int> owner(n, -1);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int v : parts[p]) {
            if (v < 0 || v >= n || owner[v] >= 0)
                throw SelfCheckError("partition scheme: parts not disjoint over [0,n)");
            owner[v] = static_cast<int>(p);
        }
    for (int v = 0; v < n; ++v)
        if (owner[v] < 0) throw SelfCheckError("partition scheme: vertex not covered");
    return owner;
}

inline void check_claimed(const ConstructionOutput& out, const std::string& name) {
    auto md = min_degree(out.hypergraph, out.claimed.min_degree_level);
    if (md.value != out.claimed.min_degree)
        throw SelfCheckError(name + ": recomputed delta_" +
                             std::to_string(out.claimed.min_degree_level) + " = " +
                             std::to_string(md.value) + ", claimed " +
                             std::to_string(out.claimed.min_degree));
    auto lc = largest_mono_component(out.hypergraph, out.coloring);
    if (lc.size != out.claimed.largest_component)
        throw SelfCheckError(name + ": recomputed largest component " + std::to_string(lc.size) +
                             ", claimed " + std::to_string(out.claimed.largest_component));
}

} // namespace detail

// K_n^r colored with r+1 colors from a balanced partition A_1..A_{r+1}: each
// edge takes the smallest color i with e disjoint from A_i (one exists since
// |e| = r). No color-i edge meets A_i, so every color-i component has order
// at most n - |A_i|; the largest component is exactly n - floor(n/(r+1)).
inline ConstructionOutput gyarfas_partition_coloring(int n, int r) {
    if (r < 3 || n < r)
        throw std::invalid_argument("gyarfas_partition_coloring: need n >= r >= 3");

    ConstructionOutput out;
    out.hypergraph = complete_hypergraph(n, r);
    if (n >= r + 1) {
        out.scheme.parts = balanced_partition(n, r + 1);
    } else { // n == r: one part per vertex plus an empty last part
        out.scheme.parts.assign(r + 1, {});
        for (int v = 0; v < n; ++v) out.scheme.parts[v] = {v};
    }
    out.scheme.num_a = r + 1;
    auto owner = detail::part_of_vertex(n, out.scheme.parts);

    out.coloring.r = r + 1;
    out.coloring.colors.reserve(out.hypergraph.edges.size());
    for (const auto& e : out.hypergraph.edges) {
        unsigned met = 0;
        for (int v : e) met |= 1u << owner[v];
        int c = __builtin_ctz(~met); // smallest part the edge avoids
        out.coloring.colors.push_back(c);
    }

    // no color-i edge may meet A_i
    for (std::size_t i = 0; i < out.hypergraph.edges.size(); ++i)
        for (int v : out.hypergraph.edges[i])
            if (owner[v] == out.coloring.colors[i])
                throw SelfCheckError("gyarfas_partition_coloring: color-i edge meets A_i");

    int min_part = n / (r + 1);
    out.claimed.min_degree_level = r - 1;
    out.claimed.min_degree = n - r + 1; // codegree of the complete hypergraph
    out.claimed.largest_component = n - min_part;
    detail::check_claimed(out, "gyarfas_partition_coloring");
    return out;
}

// The hypergraph showing the codegree threshold is sharp. Write
// n = k(r+1)+s with 0 <= s <= r; vertices split into A_1..A_{r+1}
// (|A_i| = k-1 for i <= r, |A_{r+1}| = k-(r-s)) followed by X_1..X_r of size
// 2 each. Starting from K_n^r, delete every edge that meets all of
// (X_i)_{i in P} and (A_j)_{j in Q} for some partition {P,Q} of [r] with both
// sides nonempty. Then delta_{r-1} = ceil(rn/(r+1)) - r, and the deterministic
// coloring below has largest monochromatic component ceil(rn/(r+1)) - 1.
inline ConstructionOutput extremal_codegree_example(int n, int r) {
    if (r < 3 || n < 3 * r + 1)
        throw std::invalid_argument("extremal_codegree_example: need r >= 3 and n >= 3r+1");
    int k = n / (r + 1);
    int s = n - k * (r + 1);
    if (k < r - s)
        throw std::invalid_argument(
            "extremal_codegree_example: unsupported by construction: |A_{r+1}| = k-(r-s) = " +
            std::to_string(k - (r - s)) + " < 0 (n=" + std::to_string(n) +
            " gives k=" + std::to_string(k) + ", s=" + std::to_string(s) + ")");

    ConstructionOutput out;
    auto& scheme = out.scheme;
    scheme.num_a = r + 1;
    scheme.num_x = r;
    int v = 0;
    for (int i = 0; i < r; ++i) {
        std::vector<int> part(k - 1);
        std::iota(part.begin(), part.end(), v);
        v += k - 1;
        scheme.parts.push_back(std::move(part));
    }
    {
        std::vector<int> last(k - (r - s));
        std::iota(last.begin(), last.end(), v);
        v += k - (r - s);
        scheme.parts.push_back(std::move(last));
    }
    for (int i = 0; i < r; ++i) {
        scheme.parts.push_back({v, v + 1});
        v += 2;
    }
    if (v != n) throw SelfCheckError("extremal_codegree_example: part sizes do not sum to n");

    auto owner = detail::part_of_vertex(n, scheme.parts);
    // part ids: 0..r are A_1..A_{r+1}, r+1..2r are X_1..X_r
    auto a_id = [&](int i) { return i; };
    auto x_id = [&](int i) { return r + 1 + i; };

    std::vector<std::vector<int>> edges;
    std::vector<int> colors;
    std::vector<int> in_a(n);
    for (int u = 0; u < n; ++u) in_a[u] = owner[u] <= r;

    for_each_combination(n, r, [&](std::span<const int> comb) {
        unsigned a_met = 0, x_met = 0; // over indices 0..r-1 (A_{r+1} plays no role here)
        bool touches_a = false, touches_x = false;
        for (int u : comb) {
            if (in_a[u]) {
                touches_a = true;
                if (owner[u] < r) a_met |= 1u << owner[u];
            } else {
                touches_x = true;
                x_met |= 1u << (owner[u] - (r + 1));
            }
        }
        // deletion rule, enumerated exactly as stated: some {P,Q} with
        // P,Q != {} and the edge meeting every X_i (i in P), A_j (j in Q)
        const unsigned full = (1u << r) - 1;
        for (unsigned p = 1; p < full; ++p) {
            unsigned q = full & ~p;
            if ((x_met & p) == p && (a_met & q) == q) return; // deleted
        }

        std::vector<int> e(comb.begin(), comb.end());
        int c;
        if (!touches_x) {
            unsigned met_any_a = 0;
            for (int u : e) met_any_a |= 1u << owner[u];
            c = __builtin_ctz(~met_any_a); // smallest A part avoided, may be r
        } else if (!touches_a) {
            c = r;
        } else {
            c = -1;
            for (int i = 0; i < r; ++i) {
                unsigned pair_hit = (a_met >> a_id(i)) & 1u;
                pair_hit |= (x_met >> i) & 1u;
                if (!pair_hit) { c = i; break; }
            }
            if (c < 0)
                throw SelfCheckError(
                    "extremal_codegree_example: surviving mixed edge meets every A_i u X_i");
        }
        edges.push_back(std::move(e));
        colors.push_back(c);
    });

    out.hypergraph = Hypergraph{n, r, std::move(edges)}; // combinations are canonical
    out.coloring = EdgeColoring{r + 1, std::move(colors)};

    // for i in [r], no color-i edge touches A_i u X_i
    for (std::size_t i = 0; i < out.hypergraph.edges.size(); ++i) {
        int c = out.coloring.colors[i];
        if (c >= r) continue;
        for (int u : out.hypergraph.edges[i])
            if (owner[u] == a_id(c) || owner[u] == x_id(c))
                throw SelfCheckError("extremal_codegree_example: color-i edge meets A_i u X_i");
    }

    // Last color: one component spans A_1..A_r (order r(k-1)), one spans X
    // (order 2r, the complete block on X; dominates when k = 2).
    int last_color_cap = std::max(r * (k - 1), 2 * r);
    for (const auto& comp : color_components(out.hypergraph, out.coloring, r))
        if (static_cast<int>(comp.vertices.size()) > last_color_cap)
            throw SelfCheckError("extremal_codegree_example: last-color component too large");

    std::int64_t target = ceil_div(std::int64_t{r} * n, r + 1);
    out.claimed.min_degree_level = r - 1;
    out.claimed.min_degree = target - r;
    out.claimed.largest_component = static_cast<int>(target) - 1;
    detail::check_claimed(out, "extremal_codegree_example");
    return out;
}

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// K_n with n = m*q^2, colored with q+1 colors from the affine plane of prime
// order q: vertices fall into q^2 blocks identified with the plane's points,
// the q+1 parallel classes (slopes 0..q-1, then vertical) index colors, and
// an edge between blocks gets the class of the unique line through the two
// points. Within-block edges take color 0. Every color's components are the
// lines of its class, of order exactly m*q = n/q.
inline ConstructionOutput affine_plane_coloring(int q, int m) {
    if (!is_prime(q)) throw std::invalid_argument("affine_plane_coloring: q must be prime");
    if (m < 1) throw std::invalid_argument("affine_plane_coloring: need m >= 1");
    int n = m * q * q;
    if (n < 2) throw std::invalid_argument("affine_plane_coloring: parameters too small");

    ConstructionOutput out;
    out.hypergraph = complete_hypergraph(n, 2);
    out.scheme.parts.resize(q * q);
    for (int v2 = 0; v2 < n; ++v2) out.scheme.parts[v2 / m].push_back(v2);

    // modular inverse by raising to q-2 (q prime)
    auto inv_mod = [&](int a) {
        int e = q - 2;
        long long base = a % q, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % q;
            base = base * base % q;
            e >>= 1;
        }
        return static_cast<int>(acc);
    };

    out.coloring.r = q + 1;
    out.coloring.colors.reserve(out.hypergraph.edges.size());
    for (const auto& e : out.hypergraph.edges) {
        int bu = e[0] / m, bv = e[1] / m;
        if (bu == bv) {
            out.coloring.colors.push_back(0);
            continue;
        }
        int x1 = bu / q, y1 = bu % q, x2 = bv / q, y2 = bv % q;
        if (x1 == x2) {
            out.coloring.colors.push_back(q); // vertical class
        } else {
            int slope = static_cast<int>(
                (static_cast<long long>((y2 - y1 + q) % q) * inv_mod((x2 - x1 + q) % q)) % q);
            out.coloring.colors.push_back(slope);
        }
    }

    // every color class decomposes into components of order exactly m*q
    for (int c = 0; c <= q; ++c)
        for (const auto& comp : color_components(out.hypergraph, out.coloring, c))
            if (static_cast<int>(comp.vertices.size()) != m * q)
                throw SelfCheckError("affine_plane_coloring: component of order " +
                                     std::to_string(comp.vertices.size()) + ", expected " +
                                     std::to_string(m * q));

    // plane axiom, checked directly for small orders: two distinct points lie
    // on exactly one line, i.e. exactly one class puts them on a common line
    if (q <= 7) {
        for (int b1 = 0; b1 < q * q; ++b1)
            for (int b2 = b1 + 1; b2 < q * q; ++b2) {
                int x1 = b1 / q, y1 = b1 % q, x2 = b2 / q, y2 = b2 % q;
                int lines = 0;
                for (int a = 0; a < q; ++a) // slope-a lines: y = a*x + b
                    if (((y1 - static_cast<long long>(a) * x1) % q + q) % q ==
                        ((y2 - static_cast<long long>(a) * x2) % q + q) % q)
                        ++lines;
                if (x1 == x2) ++lines; // vertical
                if (lines != 1)
                    throw SelfCheckError("affine_plane_coloring: point pair on " +
                                         std::to_string(lines) + " lines");
            }
    }

    out.claimed.min_degree_level = 1;
    out.claimed.min_degree = n - 1;
    out.claimed.largest_component = m * q;
    detail::check_claimed(out, "affine_plane_coloring");
    return out;
}

} // namespace mchyper
