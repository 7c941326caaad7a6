#ifndef RD_TEST_SUPPORT_HPP
#define RD_TEST_SUPPORT_HPP

// Shared helpers for the test binaries: fixture loading, random graph
// generators, and an independent brute-force rd oracle that shares no
// search code with the library (plain restricted-growth enumeration over
// edge colors plus a from-scratch bipartition rainbow-cut check).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rd/edge_coloring.hpp"
#include "rd/graph.hpp"
#include "rd/graph6.hpp"

namespace testsupport {

inline std::vector<rd::Graph> load_fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    if (!in.good()) throw std::runtime_error("missing fixture: " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return rd::graph6_parse_stream(ss.str());
}

inline rd::Graph random_multigraph(std::mt19937& rng, int n, int m) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<std::pair<int, int>> edges;
    while (static_cast<int>(edges.size()) < m) {
        int a = pick(rng), b = pick(rng);
        if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return rd::Graph(n, edges);
}

inline rd::Graph random_connected_multigraph(std::mt19937& rng, int n, int m) {
    while (true) {
        rd::Graph g = random_multigraph(rng, n, m);
        if (rd::is_connected(g)) return g;
    }
}

inline rd::Graph random_simple_connected(std::mt19937& rng, int n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    while (true) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.push_back({u, v});
        rd::Graph g(n, edges);
        if (rd::is_connected(g)) return g;
    }
}

// --- independent rd oracle -------------------------------------------------

// Is any bipartition cut separating u from v rainbow under col?
inline bool oracle_has_rainbow_cut(const rd::Graph& g, const std::vector<int>& col, int u, int v) {
    int n = g.vertex_count();
    for (uint32_t side = 0; side < (1u << n); ++side) {
        if (!(side >> u & 1) || (side >> v & 1)) continue;
        bool rainbow = true;
        uint64_t seen = 0;
        for (int e = 0; e < g.edge_count() && rainbow; ++e) {
            auto ed = g.edge(e);
            if ((side >> ed.u & 1) == (side >> ed.v & 1)) continue;
            uint64_t bit = 1ull << col[static_cast<size_t>(e)];
            if (seen & bit) rainbow = false;
            seen |= bit;
        }
        if (rainbow) return true;
    }
    return false;
}

inline bool oracle_all_pairs_ok(const rd::Graph& g, const std::vector<int>& col) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!oracle_has_rainbow_cut(g, col, u, v)) return false;
    return true;
}

inline bool oracle_try(const rd::Graph& g, int k, size_t e, std::vector<int>& col, int used) {
    if (e == col.size()) return oracle_all_pairs_ok(g, col);
    int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
        col[e] = c;
        if (oracle_try(g, k, e + 1, col, std::max(used, c))) return true;
    }
    col[e] = 0;
    return false;
}

// Smallest k such that some k-edge-coloring rainbow-disconnects g.
inline int oracle_rd(const rd::Graph& g) {
    if (g.edge_count() == 0) return 0;
    std::vector<int> col(static_cast<size_t>(g.edge_count()), 0);
    for (int k = 1;; ++k) {
        std::fill(col.begin(), col.end(), 0);
        if (oracle_try(g, k, 0, col, 0)) return k;
    }
}

}  // namespace testsupport

#endif  // RD_TEST_SUPPORT_HPP
