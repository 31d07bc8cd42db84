#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mchyper/hypergraph.hpp"

namespace mchyper {

// Hypergraph text format:
//   line 1: "n k m"
//   then m lines of k ascending 0-based vertex indices, single spaces,
//   in canonical (lexicographic) order.
// The reader accepts non-canonical input, canonicalizes, and warns.

inline void write_hypergraph(std::ostream& os, const Hypergraph& g) {
    os << g.n << ' ' << g.k << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges) {
        for (int i = 0; i < g.k; ++i) os << (i ? " " : "") << e[i];
        os << '\n';
    }
}

inline Hypergraph read_hypergraph(std::istream& is, std::ostream* warn = nullptr) {
    int n = 0, k = 0, m = 0;
    if (!(is >> n >> k >> m)) throw std::invalid_argument("hypergraph header: expected 'n k m'");
    if (m < 0) throw std::invalid_argument("hypergraph header: negative edge count");
    std::vector<std::vector<int>> edges(static_cast<std::size_t>(m), std::vector<int>(k));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j)
            if (!(is >> edges[i][j]))
                throw std::invalid_argument("hypergraph body: expected " + std::to_string(m) +
                                            " edges of " + std::to_string(k) + " vertices");
    auto raw = edges;
    Hypergraph g = make_hypergraph(n, k, std::move(edges));
    if (warn && g.edges != raw)
        *warn << "warning: hypergraph input was not in canonical order; canonicalized ("
              << raw.size() << " -> " << g.edge_count() << " edges)\n";
    return g;
}

// Coloring text format:
//   line 1: "m r"
//   then m lines, each a single color in [0,r), aligned to canonical edge order.

inline void write_coloring(std::ostream& os, const EdgeColoring& chi) {
    os << chi.colors.size() << ' ' << chi.r << '\n';
    for (int c : chi.colors) os << c << '\n';
}

inline EdgeColoring read_coloring(std::istream& is) {
    int m = 0, r = 0;
    if (!(is >> m >> r)) throw std::invalid_argument("coloring header: expected 'm r'");
    if (m < 0 || r < 1) throw std::invalid_argument("coloring header: need m >= 0, r >= 1");
    EdgeColoring chi{r, std::vector<int>(static_cast<std::size_t>(m))};
    for (int i = 0; i < m; ++i) {
        if (!(is >> chi.colors[i]))
            throw std::invalid_argument("coloring body: expected " + std::to_string(m) + " colors");
        if (chi.colors[i] < 0 || chi.colors[i] >= r)
            throw std::invalid_argument("coloring body: color " + std::to_string(chi.colors[i]) +
                                        " outside [0," + std::to_string(r) + ")");
    }
    return chi;
}

inline void save_hypergraph(const std::string& path, const Hypergraph& g) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open for writing: " + path);
    write_hypergraph(f, g);
}

inline Hypergraph load_hypergraph(const std::string& path, std::ostream* warn = nullptr) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open: " + path);
    return read_hypergraph(f, warn);
}

inline void save_coloring(const std::string& path, const EdgeColoring& chi) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open for writing: " + path);
    write_coloring(f, chi);
}

inline EdgeColoring load_coloring(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open: " + path);
    return read_coloring(f);
}

} // namespace mchyper
