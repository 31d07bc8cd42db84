#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "mchyper/combinatorics.hpp"
#include "mchyper/constructions.hpp"
#include "mchyper/hypergraph.hpp"
#include "mchyper/prng.hpp"
#include "mchyper/union_find.hpp"
#include "mchyper/witness.hpp"

namespace mchyper {

namespace detail {

// Largest monochromatic component order of a fully colored hypergraph.
// Cheap enough to re-run once per enumerated coloring.
inline int eval_largest_component(const Hypergraph& g, const std::vector<int>& colors, int r,
                                  UnionFind& uf) {
    int best = 1; // a vertex untouched by every color is its own component
    for (int c = 0; c < r; ++c) {
        uf.reset();
        for (int i = 0; i < g.edge_count(); ++i) {
            if (colors[i] != c) continue;
            const auto& e = g.edges[i];
            int root = e[0];
            for (int j = 1; j < g.k; ++j) root = uf.unite(root, e[j]);
            best = std::max(best, uf.component_size(root));
        }
    }
    return best;
}

} // namespace detail

// Exact minimum over all r^m colorings of the largest monochromatic
// component. Plain enumeration, no pruning, no symmetry reduction; the
// independent oracle the branch-and-bound is validated against.
inline int mc_brute(const Hypergraph& g, int r) {
    if (r < 1) throw std::invalid_argument("mc_brute: need r >= 1");
    const int m = g.edge_count();
    if (m == 0) return g.n >= 1 ? 1 : 0;
    double total = 1;
    for (int i = 0; i < m; ++i) {
        total *= r;
        if (total > 1e8)
            throw std::invalid_argument("mc_brute: r^m exceeds 1e8, instance too large");
    }
    std::vector<int> colors(m, 0);
    UnionFind uf(g.n);
    int best = g.n + 1;
    while (true) {
        best = std::min(best, detail::eval_largest_component(g, colors, r, uf));
        int i = 0;
        while (i < m && ++colors[i] == r) colors[i++] = 0;
        if (i == m) break;
    }
    return best;
}

struct HeuristicResult {
    int value = 0;
    EdgeColoring witness;
    std::int64_t iterations = 0; // move attempts consumed over all restarts
    std::uint64_t seed = 0;
};

namespace detail {

struct ColorSummary {
    int max_size = 1;
    int count_at_max = 0;
    long long merged_size = 0; // preview only: order of the component the edge joins
};

// Incrementally maintained per-color component data for the local search.
struct ColorState {
    RollbackUnionFind dsu;
    ColorSummary sum;

    explicit ColorState(int n) : dsu(n) { sum.count_at_max = n; }

    void recount(int n) {
        sum = ColorSummary{1, 0, 0};
        for (int v = 0; v < n; ++v) {
            if (dsu.find(v) != v) continue;
            int sz = dsu.size_of_root(v);
            if (sz > sum.max_size) {
                sum.max_size = sz;
                sum.count_at_max = 1;
            } else if (sz == sum.max_size) {
                ++sum.count_at_max;
            }
        }
    }

    void rebuild(const Hypergraph& g, const std::vector<int>& colors, int c, int skip_edge) {
        dsu.reset();
        for (int i = 0; i < g.edge_count(); ++i) {
            if (colors[i] != c || i == skip_edge) continue;
            const auto& e = g.edges[i];
            for (int j = 1; j < g.k; ++j) dsu.unite(e[0], e[j]);
        }
        recount(g.n);
    }

    // Effect of adding edge e, without mutating anything.
    ColorSummary peek_add(const std::vector<int>& e) const {
        int roots[16];
        int t = 0;
        long long joined = 0;
        for (int v : e) {
            int root = dsu.find(v);
            bool seen = false;
            for (int j = 0; j < t; ++j) seen = seen || roots[j] == root;
            if (!seen) {
                roots[t++] = root;
                joined += dsu.size_of_root(root);
            }
        }
        ColorSummary out = sum;
        out.merged_size = joined;
        if (t <= 1) return out;
        int s = static_cast<int>(joined);
        if (s > sum.max_size) {
            out.max_size = s;
            out.count_at_max = 1;
        } else if (s == sum.max_size) {
            ++out.count_at_max;
        }
        return out;
    }

    void apply_add(const std::vector<int>& e) {
        auto preview = peek_add(e);
        for (std::size_t j = 1; j < e.size(); ++j) dsu.unite(e[0], e[j]);
        dsu.commit();
        sum = preview;
    }
};

// Lexicographic move objective: the component order being minimized and the
// number of components attaining it.
struct Objective {
    int max_size = 0;
    int count = 0;
    friend bool operator<(const Objective& a, const Objective& b) {
        if (a.max_size != b.max_size) return a.max_size < b.max_size;
        return a.count < b.count;
    }
    friend bool operator<=(const Objective& a, const Objective& b) { return !(b < a); }
};

inline Objective combine(const std::vector<ColorState>& st, int swap_a = -1,
                         const ColorSummary* a_val = nullptr, int swap_b = -1,
                         const ColorSummary* b_val = nullptr) {
    Objective o;
    for (int c = 0; c < static_cast<int>(st.size()); ++c) {
        const ColorSummary* s = &st[c].sum;
        if (c == swap_a) s = a_val;
        if (c == swap_b) s = b_val;
        if (s->max_size > o.max_size) {
            o.max_size = s->max_size;
            o.count = s->count_at_max;
        } else if (s->max_size == o.max_size) {
            o.count += s->count_at_max;
        }
    }
    return o;
}

} // namespace detail

// Seeded random-restart hill climbing. Each move recolors one edge lying on
// a currently-largest monochromatic component to the color minimizing
// (largest component order, number of components of that order); sideways
// moves are accepted, and a restart fires after a plateau budget of
// non-improving moves. Deterministic given (seed, iterations, restarts).
inline HeuristicResult mc_heuristic(const Hypergraph& g, int r, std::int64_t iterations,
                                    int restarts, std::uint64_t seed) {
    if (r < 1) throw std::invalid_argument("mc_heuristic: need r >= 1");
    const int m = g.edge_count();
    HeuristicResult out;
    out.seed = seed;
    if (m == 0) {
        out.value = g.n >= 1 ? 1 : 0;
        out.witness = EdgeColoring{r, {}};
        return out;
    }

    const int floor_value = g.k; // one edge always forms a component of order k
    // sideways-walk budget per restart: long walks on small instances, where
    // they pay off, bounded total work on large ones (moves cost O(m) each)
    const std::int64_t plateau_cap = std::max<std::int64_t>(2000, 2'000'000 / m);
    int best_value = g.n + 1;
    std::vector<int> best_colors;

    for (int restart = 0; restart < restarts && best_value > floor_value; ++restart) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(restart)));
        std::vector<int> colors(m);
        for (int i = 0; i < m; ++i) colors[i] = bounded_int(rng, r);

        std::vector<detail::ColorState> state(r, detail::ColorState(g.n));
        for (int c = 0; c < r; ++c) state[c].rebuild(g, colors, c, -1);
        detail::Objective cur = detail::combine(state);
        if (cur.max_size < best_value) {
            best_value = cur.max_size;
            best_colors = colors;
        }

        std::int64_t plateau = 0;
        std::vector<int> candidates;
        detail::ColorState removed(g.n);
        for (std::int64_t it = 0; it < iterations && best_value > floor_value; ++it) {
            ++out.iterations;
            candidates.clear();
            for (int i = 0; i < m; ++i) {
                int c = colors[i];
                if (state[c].sum.max_size == cur.max_size &&
                    state[c].dsu.component_size(g.edges[i][0]) == cur.max_size)
                    candidates.push_back(i);
            }
            if (candidates.empty()) break; // max held by untouched vertices only
            int e = candidates[bounded_int(rng, static_cast<int>(candidates.size()))];
            int c_from = colors[e];

            removed.rebuild(g, colors, c_from, e);
            int best_to = -1;
            long long best_merged = 0;
            detail::Objective best_obj;
            for (int c_to = 0; c_to < r; ++c_to) {
                if (c_to == c_from) continue;
                auto added = state[c_to].peek_add(g.edges[e]);
                auto obj = detail::combine(state, c_from, &removed.sum, c_to, &added);
                // objective ties steer the edge toward the color where it
                // joins the smallest component
                if (best_to < 0 || obj < best_obj ||
                    (!(best_obj < obj) && added.merged_size < best_merged)) {
                    best_to = c_to;
                    best_obj = obj;
                    best_merged = added.merged_size;
                }
            }
            if (best_to >= 0 && best_obj <= cur) {
                colors[e] = best_to;
                std::swap(state[c_from], removed);
                state[best_to].apply_add(g.edges[e]);
                bool strict = best_obj < cur;
                cur = best_obj;
                plateau = strict ? 0 : plateau + 1;
                if (cur.max_size < best_value) {
                    best_value = cur.max_size;
                    best_colors = colors;
                }
            } else {
                ++plateau;
            }
            if (plateau > plateau_cap) break;
        }
    }

    out.value = best_value;
    out.witness = EdgeColoring{r, std::move(best_colors)};
    return out;
}

struct ExactOptions {
    std::int64_t max_nodes = -1; // total node budget; -1 = unlimited
    double max_seconds = -1.0;   // wall-clock cap; nondeterministic when it fires
    int workers = 1;
    bool use_symmetry = true;
    bool use_pruning = true;
    int split_depth = -1; // -1: min(m, 6)
    const EdgeColoring* warm_start = nullptr;
    std::int64_t heuristic_iterations = 2000;
    int heuristic_restarts = 4;
    std::uint64_t seed = 1;
};

struct ExactResult {
    int value = 0;
    EdgeColoring witness;
    std::int64_t nodes_explored = 0;
    bool complete = true;
    std::int64_t node_budget = -1;
    int workers = 1;
};

namespace detail {

// Depth-first branch and bound over edge color assignments in canonical
// order. Symmetry breaking admits color c at an edge only if c = 0 or some
// earlier edge already uses c-1 (every coloring is reachable up to color
// permutation, under which the objective is invariant). A node is pruned
// when its partial largest-component order already reaches the incumbent:
// coloring more edges never shrinks components.
struct BnbSearch {
    const Hypergraph& g;
    int r;
    bool use_symmetry;
    bool use_pruning;
    std::vector<RollbackUnionFind> dsu;
    std::vector<int> color_max;
    std::vector<int> assign;
    int global_max = 1;

    int best_value;
    std::vector<int> best_colors;
    bool improved = false;

    std::int64_t nodes = 0;
    std::int64_t node_cap = -1;
    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline;
    bool aborted = false;

    BnbSearch(const Hypergraph& g_, int r_, bool sym, bool prune, int incumbent)
        : g(g_), r(r_), use_symmetry(sym), use_pruning(prune),
          dsu(static_cast<std::size_t>(r_), RollbackUnionFind(g_.n)),
          color_max(static_cast<std::size_t>(r_), 1),
          assign(static_cast<std::size_t>(g_.edge_count()), -1), best_value(incumbent) {}

    bool out_of_budget() {
        if (node_cap >= 0 && nodes >= node_cap) return true;
        if (has_deadline && (nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() >= deadline)
            return true;
        return false;
    }

    // Applies edge -> color; returns the saved state needed to undo.
    struct Frame {
        int saved_color_max;
        int saved_global_max;
        std::size_t mark;
    };

    Frame apply(int level, int c) {
        Frame f{color_max[c], global_max, dsu[c].checkpoint()};
        const auto& e = g.edges[level];
        int root = e[0];
        for (int j = 1; j < g.k; ++j) root = dsu[c].unite(root, e[j]);
        color_max[c] = std::max(color_max[c], dsu[c].size_of_root(root));
        global_max = std::max(global_max, color_max[c]);
        assign[level] = c;
        return f;
    }

    void undo(int level, int c, const Frame& f) {
        dsu[c].rollback_to(f.mark);
        color_max[c] = f.saved_color_max;
        global_max = f.saved_global_max;
        assign[level] = -1;
    }

    void dfs(int level, int max_used) {
        if (aborted) return;
        if (level == g.edge_count()) {
            if (global_max < best_value) {
                best_value = global_max;
                best_colors = assign;
                improved = true;
            }
            return;
        }
        int top = use_symmetry ? std::min(r - 1, max_used + 1) : r - 1;
        for (int c = 0; c <= top; ++c) {
            ++nodes;
            if (out_of_budget()) {
                aborted = true;
                return;
            }
            Frame f = apply(level, c);
            if (!use_pruning || global_max < best_value)
                dfs(level + 1, std::max(max_used, c));
            undo(level, c, f);
            if (aborted) return;
        }
    }

    // Like dfs but stops at depth `split`, collecting the surviving prefixes.
    void enumerate_prefixes(int level, int max_used, int split,
                            std::vector<std::pair<std::vector<int>, int>>& out) {
        if (aborted) return;
        if (level == split) {
            out.emplace_back(std::vector<int>(assign.begin(), assign.begin() + level), max_used);
            return;
        }
        int top = use_symmetry ? std::min(r - 1, max_used + 1) : r - 1;
        for (int c = 0; c <= top; ++c) {
            ++nodes;
            if (out_of_budget()) {
                aborted = true;
                return;
            }
            Frame f = apply(level, c);
            if (!use_pruning || global_max < best_value)
                enumerate_prefixes(level + 1, std::max(max_used, c), split, out);
            undo(level, c, f);
            if (aborted) return;
        }
    }

    // Replays a prefix without counting nodes, then searches below it.
    void run_branch(const std::vector<int>& prefix, int max_used) {
        std::vector<Frame> frames;
        frames.reserve(prefix.size());
        for (std::size_t i = 0; i < prefix.size(); ++i)
            frames.push_back(apply(static_cast<int>(i), prefix[i]));
        dfs(static_cast<int>(prefix.size()), max_used);
        for (std::size_t i = prefix.size(); i-- > 0;)
            undo(static_cast<int>(i), prefix[i], frames[i]);
    }
};

} // namespace detail

// Exact mc_r(G) by symmetry-reduced branch and bound. The search fans out
// over the color prefixes of the first few edges; each branch runs an
// independent sequential search against the shared warm-start incumbent, so
// reports are identical for every worker count and schedule. If the search
// completes, value = mc_r(G); otherwise value is the best upper bound found.
inline ExactResult mc_exact(const Hypergraph& g, int r, const ExactOptions& opt = {}) {
    if (r < 1) throw std::invalid_argument("mc_exact: need r >= 1");
    const int m = g.edge_count();

    ExactResult res;
    res.node_budget = opt.max_nodes;
    res.workers = std::max(1, opt.workers);
    if (m == 0) {
        res.value = g.n >= 1 ? 1 : 0;
        res.witness = EdgeColoring{r, {}};
        return res;
    }

    // warm start: supplied coloring or a short internal hill-climb
    int incumbent_value;
    EdgeColoring incumbent_witness;
    if (opt.warm_start) {
        require_consistent(g, *opt.warm_start);
        if (opt.warm_start->r > r)
            throw std::invalid_argument("mc_exact: warm start uses more than r colors");
        incumbent_witness = *opt.warm_start;
        incumbent_witness.r = r;
        incumbent_value = largest_mono_component(g, incumbent_witness).size;
    } else {
        auto h = mc_heuristic(g, r, opt.heuristic_iterations, opt.heuristic_restarts, opt.seed);
        incumbent_value = h.value;
        incumbent_witness = std::move(h.witness);
    }

    const int split = opt.split_depth >= 0 ? std::min(opt.split_depth, m) : std::min(m, 6);
    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(opt.max_seconds > 0 ? opt.max_seconds
                                                                                : 0.0));

    // phase 1: enumerate root branches
    detail::BnbSearch planner(g, r, opt.use_symmetry, opt.use_pruning, incumbent_value);
    planner.node_cap = opt.max_nodes;
    if (opt.max_seconds > 0) {
        planner.has_deadline = true;
        planner.deadline = deadline;
    }
    std::vector<std::pair<std::vector<int>, int>> branches;
    planner.enumerate_prefixes(0, -1, split, branches);
    std::int64_t phase1_nodes = planner.nodes;
    bool any_aborted = planner.aborted;

    // phase 2: per-branch budgets, deterministic for any worker count
    const std::size_t nb = branches.size();
    std::vector<std::int64_t> caps(nb, -1);
    if (opt.max_nodes >= 0) {
        std::int64_t left = std::max<std::int64_t>(0, opt.max_nodes - phase1_nodes);
        for (std::size_t i = 0; i < nb; ++i)
            caps[i] = left / static_cast<std::int64_t>(nb) +
                      (static_cast<std::int64_t>(i) < left % static_cast<std::int64_t>(nb) ? 1 : 0);
    }

    struct BranchOutcome {
        int value;
        std::vector<int> colors;
        bool improved = false;
        std::int64_t nodes = 0;
        bool aborted = false;
    };
    std::vector<BranchOutcome> outcomes(nb);

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= nb) break;
            detail::BnbSearch s(g, r, opt.use_symmetry, opt.use_pruning, incumbent_value);
            s.node_cap = caps[i];
            if (opt.max_seconds > 0) {
                s.has_deadline = true;
                s.deadline = deadline;
            }
            s.run_branch(branches[i].first, branches[i].second);
            outcomes[i] = BranchOutcome{s.best_value, std::move(s.best_colors), s.improved,
                                        s.nodes, s.aborted};
        }
    };
    if (res.workers == 1 || nb <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < res.workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    res.nodes_explored = phase1_nodes;
    res.value = incumbent_value;
    res.witness = std::move(incumbent_witness);
    for (std::size_t i = 0; i < nb; ++i) {
        res.nodes_explored += outcomes[i].nodes;
        any_aborted = any_aborted || outcomes[i].aborted;
        if (outcomes[i].improved && outcomes[i].value < res.value) {
            res.value = outcomes[i].value;
            res.witness = EdgeColoring{r, outcomes[i].colors};
        }
    }
    res.complete = !any_aborted;
    return res;
}

struct BoundsOptions {
    std::uint64_t seed = 1;
    std::int64_t iterations = 100000;
    int restarts = 20;
    bool try_exact = false;
    std::int64_t exact_nodes = 50'000'000;
    int workers = 1;
};

struct BoundsReport {
    int n = 0;
    int r = 0; // colors
    int lower = 1;
    std::string lower_kind = "trivial";
    int upper = 0;
    std::string upper_kind = "heuristic";
    EdgeColoring upper_witness;
    bool theorem_applicable = false;
    std::int64_t min_codegree = -1;
    std::optional<int> exact_value;
    bool exact_complete = false;
    std::optional<ComponentCertificate> certificate;
    std::optional<int> mc;
    std::string method = "heuristic";
};

// Combines every bound the library can certify for mc_r(G): the codegree
// theorem's lower bound when G is u-uniform with r = u+1 colors and the
// degree hypothesis holds (demonstrated constructively on the adversarial
// witness), the balanced-partition coloring as an upper witness on complete
// hypergraphs, the hill-climbing upper bound, and optionally the exact
// solver.
inline BoundsReport mc_bounds(const Hypergraph& g, int r, const BoundsOptions& opt = {}) {
    if (r < 1) throw std::invalid_argument("mc_bounds: need r >= 1");
    BoundsReport rep;
    rep.n = g.n;
    rep.r = r;
    const int u = g.k;

    auto h = mc_heuristic(g, r, opt.iterations, opt.restarts, opt.seed);
    rep.upper = h.value;
    rep.upper_kind = "heuristic";
    rep.upper_witness = h.witness;

    if (r == u + 1 && u >= 3 && g.n >= u &&
        g.edge_count() == binomial(g.n, u)) {
        auto gy = gyarfas_partition_coloring(g.n, u);
        if (gy.claimed.largest_component <= rep.upper) {
            rep.upper = gy.claimed.largest_component;
            rep.upper_kind = "construction";
            rep.upper_witness = gy.coloring;
        }
    }

    rep.lower = g.edge_count() > 0 ? g.k : 1;
    rep.lower_kind = g.edge_count() > 0 ? "edge" : "trivial";

    if (r == u + 1 && u >= 3) {
        rep.min_codegree = min_degree(g, u - 1).value;
        rep.theorem_applicable =
            static_cast<std::int64_t>(u + 1) * rep.min_codegree >=
            static_cast<std::int64_t>(u) * g.n - static_cast<std::int64_t>(u - 1) * (u + 1);
        if (rep.theorem_applicable) {
            int bound = static_cast<int>(ceil_div(static_cast<std::int64_t>(u) * g.n, u + 1));
            if (bound > rep.lower) {
                rep.lower = bound;
                rep.lower_kind = "theorem";
            }
            // run the constructive argument on the adversarial witness
            rep.certificate = find_large_component(g, rep.upper_witness, 0);
        }
    }

    if (opt.try_exact) {
        ExactOptions eo;
        eo.max_nodes = opt.exact_nodes;
        eo.workers = opt.workers;
        eo.seed = opt.seed;
        eo.warm_start = &rep.upper_witness;
        auto ex = mc_exact(g, r, eo);
        rep.exact_value = ex.value;
        rep.exact_complete = ex.complete;
        if (ex.value < rep.upper) {
            rep.upper = ex.value;
            rep.upper_kind = "exact";
            rep.upper_witness = ex.witness;
        }
        if (ex.complete) {
            rep.lower = ex.value;
            rep.lower_kind = "exact";
            rep.upper_kind = "exact";
        }
    }

    if (rep.lower > rep.upper)
        throw TheoremViolation("mc_bounds: certified lower bound " + std::to_string(rep.lower) +
                               " exceeds witnessed upper bound " + std::to_string(rep.upper));
    if (rep.lower == rep.upper) rep.mc = rep.lower;

    if (rep.exact_complete)
        rep.method = "exact";
    else if (rep.mc && rep.lower_kind == "theorem")
        rep.method = "theorem+construction";
    else
        rep.method = "heuristic";
    return rep;
}

} // namespace mchyper
