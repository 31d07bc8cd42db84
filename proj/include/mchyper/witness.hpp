#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mchyper/bitset.hpp"
#include "mchyper/combinatorics.hpp"
#include "mchyper/hypergraph.hpp"

namespace mchyper {

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a step that the codegree hypothesis makes impossible actually
// happens: either an implementation bug or a counterexample to the theorem.
// The message carries a dump of the deficiency profile.
struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Deficiency data at a base vertex x: per color i in [0..r], the color-i
// component C_i of x, F_i = V \ C_i, their union F, and the exclusive sets
// F_i* = F_i minus every other F_j.
struct DeficiencyProfile {
    int n = 0;
    int r = 0; // uniformity; the profile always covers r+1 colors
    int base_vertex = 0;
    std::vector<VertexSet> component;
    std::vector<VertexSet> deficiency;
    VertexSet deficiency_union;
    std::vector<VertexSet> exclusive;

    void recompute_derived() {
        deficiency_union = VertexSet(n);
        for (const auto& f : deficiency) deficiency_union |= f;
        exclusive.assign(deficiency.size(), VertexSet(n));
        for (std::size_t i = 0; i < deficiency.size(); ++i) {
            exclusive[i] = deficiency[i];
            for (std::size_t j = 0; j < deficiency.size(); ++j)
                if (j != i) exclusive[i] -= deficiency[j];
        }
    }
};

// Builds the profile for an (r+1)-colored r-uniform hypergraph. A declared
// color count below r+1 is padded: the missing colors are unused, so their
// component of x is the trivial {x}.
inline DeficiencyProfile deficiency_profile(const Hypergraph& g, const EdgeColoring& chi, int x) {
    require_consistent(g, chi);
    if (x < 0 || x >= g.n) throw std::invalid_argument("deficiency_profile: x out of range");
    int r = g.k;
    if (chi.r > r + 1)
        throw PreconditionError("deficiency_profile: coloring uses " + std::to_string(chi.r) +
                                " colors, expected at most r+1 = " + std::to_string(r + 1));
    DeficiencyProfile p;
    p.n = g.n;
    p.r = r;
    p.base_vertex = x;
    VertexSet all = VertexSet(g.n).complement();
    for (int c = 0; c <= r; ++c) {
        VertexSet comp(g.n);
        if (c < chi.r) {
            comp = component_set_of(g, chi, c, x);
        } else {
            comp.set(x); // color unused: trivial component
        }
        p.component.push_back(comp);
        p.deficiency.push_back(all - comp);
    }
    p.recompute_derived();
    return p;
}

struct ClaimCheck {
    int claim = 0;            // 1, 2 or 3
    std::vector<int> indices; // color indices of the instance
    bool pass = true;
};

struct ClaimReport {
    bool applicable = false; // all deficiency sets satisfy (r+1)|F_i| > n
    bool all_pass = true;
    std::vector<ClaimCheck> checks;
};

// Evaluates, over all index tuples,
//   claim 1: F_h n F_i n F_j = {}            (distinct h,i,j)
//   claim 2: F_h n F_i = {} or F_j n F_k = {} (distinct h,i,j,k)
//   claim 3: F_h n F_i = {} or F_j* = {}      (distinct h,i,j)
// These are guaranteed only when every deficiency set has (r+1)|F_i| > n;
// otherwise the report is marked not applicable.
inline ClaimReport check_claims(const DeficiencyProfile& p, int n, int r) {
    if (n != p.n || r != p.r)
        throw std::invalid_argument("check_claims: n/r disagree with profile");
    ClaimReport rep;
    rep.applicable = true;
    for (const auto& f : p.deficiency)
        if (static_cast<std::int64_t>(r + 1) * f.count() <= n) rep.applicable = false;

    const int colors = r + 1;
    for (int h = 0; h < colors; ++h)
        for (int i = h + 1; i < colors; ++i)
            for (int j = i + 1; j < colors; ++j) {
                bool pass = !(p.deficiency[h] & p.deficiency[i]).intersects(p.deficiency[j]);
                rep.checks.push_back({1, {h, i, j}, pass});
            }
    for (int h = 0; h < colors; ++h)
        for (int i = h + 1; i < colors; ++i)
            for (int j = h + 1; j < colors; ++j) {
                if (j == i) continue;
                for (int kk = j + 1; kk < colors; ++kk) {
                    if (kk == i) continue;
                    bool pass = !p.deficiency[h].intersects(p.deficiency[i]) ||
                                !p.deficiency[j].intersects(p.deficiency[kk]);
                    rep.checks.push_back({2, {h, i, j, kk}, pass});
                }
            }
    for (int h = 0; h < colors; ++h)
        for (int i = h + 1; i < colors; ++i)
            for (int j = 0; j < colors; ++j) {
                if (j == h || j == i) continue;
                bool pass = !p.deficiency[h].intersects(p.deficiency[i]) ||
                            p.exclusive[j].none();
                rep.checks.push_back({3, {h, i, j}, pass});
            }
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

struct CertAssertion {
    std::string name;
    std::vector<int> indices;
    bool pass = true;
};

enum class CertificateBranch { SmallDeficiency, Endgame };

inline const char* branch_name(CertificateBranch b) {
    return b == CertificateBranch::SmallDeficiency ? "SMALL_DEFICIENCY" : "ENDGAME";
}

// A monochromatic component of order >= ceil(rn/(r+1)) together with the
// proof branch that produced it. Colors are reported in the original
// labeling; relabeling[orig] gives the working label used by the endgame.
struct ComponentCertificate {
    int color = 0;
    std::vector<int> vertices;
    int size = 0;
    CertificateBranch branch = CertificateBranch::SmallDeficiency;
    int branch_color = -1;        // small-deficiency color (original label)
    std::vector<int> relabeling;  // empty unless the endgame ran
    int majority_color = -1;      // original color relabeled to the last slot
    std::vector<CertAssertion> assertions;
    int base_vertex = 0;
};

namespace detail {

inline std::string profile_dump(const DeficiencyProfile& p) {
    std::ostringstream os;
    os << "n=" << p.n << " r=" << p.r << " x=" << p.base_vertex << "; |F_i|=[";
    for (std::size_t i = 0; i < p.deficiency.size(); ++i)
        os << (i ? "," : "") << p.deficiency[i].count();
    os << "]; F_i=[";
    for (std::size_t i = 0; i < p.deficiency.size(); ++i) {
        os << (i ? ";" : "") << "{";
        bool first = true;
        p.deficiency[i].for_each([&](int v) {
            os << (first ? "" : ",") << v;
            first = false;
        });
        os << "}";
    }
    os << "]";
    return os.str();
}

[[noreturn]] inline void violation(const std::string& what, const DeficiencyProfile& p) {
    throw TheoremViolation(what + " -- " + profile_dump(p));
}

} // namespace detail

// Executes the constructive argument: given an r-uniform hypergraph whose
// minimum (r-1)-degree is at least rn/(r+1) - (r-1) and any coloring with at
// most r+1 colors, returns a monochromatic component of order at least
// ceil(rn/(r+1)).
//
// Either some deficiency set is small, and the corresponding component of
// the base vertex already meets the bound, or every deficiency set is large;
// then the three claims hold, some two deficiency sets intersect, and after
// relabeling that pair to the last two slots the remaining deficiencies are
// pairwise disjoint with empty exclusive parts, forcing every F_i into the
// final deficiency set and the union of the r intersections into one
// component of the last color.
inline ComponentCertificate find_large_component(const Hypergraph& g, const EdgeColoring& chi,
                                                 int x = 0) {
    require_consistent(g, chi);
    const int r = g.k;
    const int n = g.n;
    if (r < 3)
        throw PreconditionError("find_large_component: uniformity must be at least 3");
    if (x < 0 || x >= n) throw std::invalid_argument("find_large_component: x out of range");
    if (chi.r > r + 1)
        throw PreconditionError("find_large_component: coloring uses more than r+1 colors");

    // degree hypothesis, in exact integer form
    auto delta = min_degree(g, r - 1).value;
    if (static_cast<std::int64_t>(r + 1) * delta <
        static_cast<std::int64_t>(r) * n - static_cast<std::int64_t>(r - 1) * (r + 1))
        throw PreconditionError(
            "find_large_component: minimum (r-1)-degree " + std::to_string(delta) +
            " below rn/(r+1)-(r-1) for n=" + std::to_string(n) + ", r=" + std::to_string(r));

    const std::int64_t bound = ceil_div(static_cast<std::int64_t>(r) * n, r + 1);
    auto profile = deficiency_profile(g, chi, x);

    ComponentCertificate cert;
    cert.base_vertex = x;

    // small-deficiency exit: (r+1)|F_i| <= n for the smallest such i
    for (int i = 0; i <= r; ++i) {
        if (static_cast<std::int64_t>(r + 1) * profile.deficiency[i].count() <= n) {
            cert.branch = CertificateBranch::SmallDeficiency;
            cert.branch_color = i;
            cert.color = i;
            cert.vertices = profile.component[i].to_vector();
            cert.size = static_cast<int>(cert.vertices.size());
            cert.assertions.push_back({"certificate-bound", {i}, cert.size >= bound});
            if (cert.size < bound)
                detail::violation("small-deficiency component below bound", profile);
            return cert;
        }
    }

    // all deficiencies large: the claims must hold
    auto claims = check_claims(profile, n, r);
    for (const auto& c : claims.checks) {
        cert.assertions.push_back({"claim-" + std::to_string(c.claim), c.indices, c.pass});
        if (!c.pass)
            detail::violation("claim " + std::to_string(c.claim) + " failed", profile);
    }

    // pigeonhole pair: smallest (i,j) with intersecting deficiencies
    int pi = -1, pj = -1;
    for (int i = 0; i <= r && pi < 0; ++i)
        for (int j = i + 1; j <= r; ++j)
            if (profile.deficiency[i].intersects(profile.deficiency[j])) {
                pi = i;
                pj = j;
                break;
            }
    if (pi < 0) detail::violation("no intersecting deficiency pair despite large sets", profile);

    // relabel: {pi,pj} -> {r-1, r}, the rest ascending onto 0..r-2
    std::vector<int> relabel(r + 1, -1);
    relabel[pi] = r - 1;
    relabel[pj] = r;
    for (int orig = 0, next = 0; orig <= r; ++orig)
        if (relabel[orig] < 0) relabel[orig] = next++;
    std::vector<int> inv(r + 1);
    for (int orig = 0; orig <= r; ++orig) inv[relabel[orig]] = orig;
    auto fw = [&](int a) -> const VertexSet& { return profile.deficiency[inv[a]]; };

    // first r-1 working colors: pairwise disjoint deficiencies, empty
    // exclusive sets
    for (int a = 0; a < r - 1; ++a)
        for (int b = a + 1; b < r - 1; ++b) {
            bool pass = !fw(a).intersects(fw(b));
            cert.assertions.push_back({"endgame-pairwise-disjoint", {a, b}, pass});
            if (!pass) detail::violation("working deficiencies not disjoint", profile);
        }
    for (int a = 0; a < r - 1; ++a) {
        bool pass = profile.exclusive[inv[a]].none();
        cert.assertions.push_back({"endgame-exclusive-empty", {a}, pass});
        if (!pass) detail::violation("working exclusive set nonempty", profile);
    }

    // majority side at a = r-2: send the side holding more of F_a to the last
    // slot (an exact tie already sits at the larger-indexed color)
    const int a_pick = r - 2;
    if ((fw(a_pick) & fw(r - 1)).count() > (fw(a_pick) & fw(r)).count()) {
        std::swap(inv[r - 1], inv[r]);
        relabel[inv[r - 1]] = r - 1;
        relabel[inv[r]] = r;
    }
    {
        std::int64_t inter = (fw(a_pick) & fw(r)).count();
        bool pass = 2 * static_cast<std::int64_t>(r + 1) * inter > n;
        cert.assertions.push_back({"endgame-majority", {a_pick, r}, pass});
        if (!pass) detail::violation("majority side below n/(2(r+1))", profile);
    }

    // derived equalities: every earlier deficiency lies inside the last one
    for (int b = 0; b < r - 1; ++b) {
        bool pass = (fw(b) & fw(r)).count() == fw(b).count();
        cert.assertions.push_back({"endgame-contained-in-last", {b}, pass});
        if (!pass) detail::violation("F_b not contained in last deficiency", profile);
    }
    {
        bool pass = profile.exclusive[inv[r - 1]].none();
        cert.assertions.push_back({"endgame-second-last-exclusive-empty", {r - 1}, pass});
        if (!pass) detail::violation("second-last exclusive set nonempty", profile);
    }
    {
        bool pass = (fw(r - 1) & fw(r)).count() == fw(r - 1).count();
        cert.assertions.push_back({"endgame-second-last-in-last", {r - 1}, pass});
        if (!pass) detail::violation("second-last deficiency not inside last", profile);
    }

    // the union of the r intersections sits inside one component of the last
    // working color
    VertexSet uni(n);
    for (int b = 0; b < r; ++b) uni |= fw(b) & fw(r);
    int c_orig = inv[r];
    int seed_vertex = uni.first();
    if (seed_vertex < 0) detail::violation("empty endgame union", profile);

    VertexSet comp(n);
    if (c_orig < chi.r) {
        comp = component_set_of(g, chi, c_orig, seed_vertex);
    } else {
        comp.set(seed_vertex); // unused color: cannot happen on legal inputs
    }
    {
        bool pass = uni.is_subset_of(comp);
        cert.assertions.push_back({"endgame-union-single-component", {c_orig}, pass});
        if (!pass) detail::violation("endgame union spans several components", profile);
    }
    {
        bool pass = static_cast<std::int64_t>(r + 1) * comp.count() >
                    static_cast<std::int64_t>(r) * n;
        cert.assertions.push_back({"endgame-component-bound", {c_orig}, pass});
        if (!pass) detail::violation("endgame component below rn/(r+1)", profile);
    }

    cert.branch = CertificateBranch::Endgame;
    cert.color = c_orig;
    cert.majority_color = c_orig;
    cert.relabeling = relabel;
    cert.vertices = comp.to_vector();
    cert.size = static_cast<int>(cert.vertices.size());
    if (cert.size < bound) detail::violation("endgame certificate below bound", profile);
    return cert;
}

} // namespace mchyper
