#include "rd/edge_coloring.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace rd {

bool is_proper(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.edge_count()) return false;
    for (int e = 0; e < g.edge_count(); ++e) {
        int col = c.colors[static_cast<size_t>(e)];
        if (col < 1 || col > c.num_colors) return false;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                if (c.colors[static_cast<size_t>(inc[i])] == c.colors[static_cast<size_t>(inc[j])]) return false;
    }
    return true;
}

int colors_used(const EdgeColoring& c) {
    std::vector<bool> seen(static_cast<size_t>(c.num_colors + 1), false);
    int used = 0;
    for (int col : c.colors) {
        if (!seen[static_cast<size_t>(col)]) {
            seen[static_cast<size_t>(col)] = true;
            ++used;
        }
    }
    return used;
}

namespace {

// Misra-Gries machinery. Colors are 1..max_color, 0 = uncolored.
struct VizingState {
    const Graph& g;
    int max_color;
    std::vector<int> color;

    VizingState(const Graph& graph, int k)
        : g(graph), max_color(k), color(static_cast<size_t>(graph.edge_count()), 0) {}

    bool free_at(int v, int c) const {
        for (int e : g.incident_edges(v))
            if (color[static_cast<size_t>(e)] == c) return false;
        return true;
    }

    int smallest_free(int v) const {
        for (int c = 1; c <= max_color; ++c)
            if (free_at(v, c)) return c;
        return 0;
    }

    int edge_with_color(int v, int c) const {
        for (int e : g.incident_edges(v))
            if (color[static_cast<size_t>(e)] == c) return e;
        return -1;
    }

    // Maximal fan of u starting at v: each next spoke's color is free at
    // the previous fan vertex.
    std::vector<int> build_fan(int u, int v) const {
        std::vector<int> fan{v};
        std::vector<bool> used(static_cast<size_t>(g.vertex_count()), false);
        used[static_cast<size_t>(v)] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int e : g.incident_edges(u)) {
                int c = color[static_cast<size_t>(e)];
                if (c == 0) continue;
                int w = g.other_end(e, u);
                if (used[static_cast<size_t>(w)]) continue;
                if (free_at(fan.back(), c)) {
                    fan.push_back(w);
                    used[static_cast<size_t>(w)] = true;
                    grew = true;
                    break;
                }
            }
        }
        return fan;
    }

    // Swap colors c and d along the maximal path starting at u whose
    // first edge is colored d.
    void invert_cd_path(int u, int c, int d) {
        int v = u;
        int want = d;
        int prev_edge = -1;
        while (true) {
            int e = -1;
            for (int f : g.incident_edges(v)) {
                if (f != prev_edge && color[static_cast<size_t>(f)] == want) {
                    e = f;
                    break;
                }
            }
            if (e == -1) break;
            color[static_cast<size_t>(e)] = (want == d) ? c : d;
            v = g.other_end(e, v);
            prev_edge = e;
            want = (want == d) ? c : d;
        }
    }

    void color_edge(int id) {
        int u = g.edge(id).u;
        int v = g.edge(id).v;
        std::vector<int> fan = build_fan(u, v);
        int c = smallest_free(u);
        int d = smallest_free(fan.back());
        assert(c != 0 && d != 0);
        if (c != d) invert_cd_path(u, c, d);
        // After inversion d is free at u. Pick the longest fan prefix that
        // is still a fan and ends at a vertex with d free, then rotate.
        int w_index = -1;
        for (size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                int e = -1;
                for (int f : g.incident_edges(u))
                    if (g.other_end(f, u) == fan[i] && color[static_cast<size_t>(f)] != 0) e = f;
                if (e == -1 || !free_at(fan[i - 1], color[static_cast<size_t>(e)])) break;
            }
            if (free_at(fan[i], d)) w_index = static_cast<int>(i);
        }
        assert(w_index >= 0);
        // Rotate: shift spoke colors down the prefix, freeing the last spoke.
        for (int i = 0; i < w_index; ++i) {
            int e_next = -1;
            for (int f : g.incident_edges(u))
                if (g.other_end(f, u) == fan[static_cast<size_t>(i + 1)]) e_next = f;
            int e_cur = -1;
            for (int f : g.incident_edges(u))
                if (g.other_end(f, u) == fan[static_cast<size_t>(i)]) e_cur = f;
            color[static_cast<size_t>(e_cur)] = color[static_cast<size_t>(e_next)];
            color[static_cast<size_t>(e_next)] = 0;
        }
        int e_w = -1;
        for (int f : g.incident_edges(u))
            if (g.other_end(f, u) == fan[static_cast<size_t>(w_index)]) e_w = f;
        color[static_cast<size_t>(e_w)] = d;
    }
};

}  // namespace

EdgeColoring vizing_proper_coloring(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("vizing coloring requires a simple graph; use shannon_proper_coloring");
    int delta = degree_profile(g).max_degree;
    VizingState st(g, std::max(1, delta + 1));
    for (int e = 0; e < g.edge_count(); ++e) st.color_edge(e);
    EdgeColoring out;
    out.num_colors = g.edge_count() == 0 ? 0 : delta + 1;
    out.colors = std::move(st.color);
    assert(is_proper(g, out) || g.edge_count() == 0);
    return out;
}

namespace {

// Exact proper-coloring search with k colors. Edges ordered by max
// endpoint degree descending, ties by id; smallest feasible color first,
// a new color index only as (current max)+1.
struct ProperSearch {
    const Graph& g;
    int k;
    std::vector<int> order;
    std::vector<uint32_t> used_at;  // bitmask of colors at each vertex (bit c-1)
    std::vector<int> result;

    ProperSearch(const Graph& graph, int colors) : g(graph), k(colors) {
        order.resize(static_cast<size_t>(g.edge_count()));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            int da = std::max(g.degree(g.edge(a).u), g.degree(g.edge(a).v));
            int db = std::max(g.degree(g.edge(b).u), g.degree(g.edge(b).v));
            if (da != db) return da > db;
            return a < b;
        });
        used_at.assign(static_cast<size_t>(g.vertex_count()), 0);
        result.assign(static_cast<size_t>(g.edge_count()), 0);
    }

    bool search(size_t pos, int max_used) {
        if (pos == order.size()) return true;
        int e = order[pos];
        auto [u, v] = g.edge(e);
        uint32_t blocked = used_at[static_cast<size_t>(u)] | used_at[static_cast<size_t>(v)];
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            uint32_t bit = 1u << (c - 1);
            if (blocked & bit) continue;
            result[static_cast<size_t>(e)] = c;
            used_at[static_cast<size_t>(u)] |= bit;
            used_at[static_cast<size_t>(v)] |= bit;
            if (search(pos + 1, std::max(max_used, c))) return true;
            used_at[static_cast<size_t>(u)] &= ~bit;
            used_at[static_cast<size_t>(v)] &= ~bit;
            result[static_cast<size_t>(e)] = 0;
        }
        return false;
    }

    bool run() { return search(0, 0); }
};

}  // namespace

EdgeColoring shannon_proper_coloring(const Graph& g) {
    int delta = degree_profile(g).max_degree;
    int k = 3 * delta / 2;
    if (g.edge_count() == 0) return {0, {}};
    ProperSearch ps(g, k);
    bool ok = ps.run();
    assert(ok);  // guaranteed by Shannon's bound
    (void)ok;
    EdgeColoring out;
    out.num_colors = k;
    out.colors = std::move(ps.result);
    return out;
}

ChromaticIndexResult chromatic_index_exact(const Graph& g, int max_edges) {
    int delta = degree_profile(g).max_degree;
    ChromaticIndexResult r;
    r.bracket = {delta, g.is_simple() ? delta + 1 : 3 * delta / 2};
    if (g.edge_count() == 0) {
        r.value = 0;
        r.witness = EdgeColoring{0, {}};
        r.bracket = {0, 0};
        return r;
    }
    if (g.edge_count() > max_edges) return r;
    int upper = g.is_simple() ? delta + 1 : 3 * delta / 2;
    for (int k = delta; k <= upper; ++k) {
        ProperSearch ps(g, k);
        if (ps.run()) {
            r.value = k;
            r.witness = EdgeColoring{k, std::move(ps.result)};
            r.bracket = {k, k};
            return r;
        }
    }
    throw std::logic_error("chromatic index search exceeded its theoretical upper bound");
}

bool class_one_sufficient(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("class_one_sufficient requires a simple graph");
    Subgraph gd = max_degree_subgraph(g);
    auto comp = connected_components(gd.graph);
    int num_comp = gd.graph.vertex_count() == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    bool all_cycles = true;
    for (int c = 0; c < num_comp; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < gd.graph.vertex_count(); ++v)
            if (comp[static_cast<size_t>(v)] == c) verts.push_back(v);
        int nc = static_cast<int>(verts.size());
        int mc = 0;
        bool all_deg2 = true;
        for (int v : verts) {
            mc += gd.graph.degree(v);
            if (gd.graph.degree(v) != 2) all_deg2 = false;
        }
        mc /= 2;
        if (mc > nc) return false;  // neither a tree nor unicyclic
        if (!(all_deg2 && mc == nc && nc >= 3)) all_cycles = false;
    }
    return !all_cycles;
}

bool is_overfull(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("is_overfull requires a simple graph");
    int delta = degree_profile(g).max_degree;
    return g.edge_count() > (g.vertex_count() / 2) * delta;
}

}  // namespace rd
