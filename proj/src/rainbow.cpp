#include "rd/rainbow.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rd {

namespace {

bool colors_distinct(const EdgeColoring& c, const std::vector<int>& edge_ids) {
    uint64_t seen = 0;
    for (int e : edge_ids) {
        uint64_t bit = 1ull << c.colors[static_cast<size_t>(e)];
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

std::vector<int> crossing_edges_of_mask(const Graph& g, uint32_t mask) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        if (((mask >> a) & 1u) != ((mask >> b) & 1u)) out.push_back(e);
    }
    return out;
}

bool separates(const Graph& g, const std::vector<int>& removed_edges, int u, int v) {
    std::vector<bool> gone(static_cast<size_t>(g.edge_count()), false);
    for (int e : removed_edges) gone[static_cast<size_t>(e)] = true;
    std::vector<bool> vis(static_cast<size_t>(g.vertex_count()), false);
    std::vector<int> stack{u};
    vis[static_cast<size_t>(u)] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int e : g.incident_edges(x)) {
            if (gone[static_cast<size_t>(e)]) continue;
            int y = g.other_end(e, x);
            if (!vis[static_cast<size_t>(y)]) {
                vis[static_cast<size_t>(y)] = true;
                stack.push_back(y);
            }
        }
    }
    return !vis[static_cast<size_t>(v)];
}

}  // namespace

std::optional<CutCertificate> exists_rainbow_cut(const Graph& g, const EdgeColoring& c, int u, int v) {
    if (u == v) throw std::invalid_argument("rainbow cut requires u != v");
    int n = g.vertex_count();
    if (n > 30) throw std::invalid_argument("bipartition enumeration limited to n <= 30");
    uint32_t ubit = 1u << u, vbit = 1u << v;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask & ubit) || (mask & vbit)) continue;
        std::vector<int> cross = crossing_edges_of_mask(g, mask);
        if (!colors_distinct(c, cross)) continue;
        CutCertificate cert;
        cert.u = u;
        cert.v = v;
        cert.crossing_edges = std::move(cross);
        for (int x = 0; x < n; ++x)
            if ((mask >> x) & 1u) cert.side.push_back(x);
        return cert;
    }
    return std::nullopt;
}

RdVerifyResult verify_rd_coloring(const Graph& g, const EdgeColoring& c) {
    RdVerifyResult r;
    RdCertificate cert;
    cert.coloring = c;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            auto cut = exists_rainbow_cut(g, c, u, v);
            if (!cut) {
                r.failing_pair = {u, v};
                return r;
            }
            cert.cuts.push_back(std::move(*cut));
        }
    }
    r.certificate = std::move(cert);
    return r;
}

namespace {

// Backtracking search for a rainbow disconnection coloring with k colors.
// Per pair we cache the inclusion-minimal bipartition cuts; a cut is
// doomed once two of its assigned edges share a color, a pair is doomed
// once all its cuts are.
struct RdSearch {
    struct Cut {
        std::vector<int> edges;
        std::vector<int> pairs;
        std::vector<int> color_count;
        int dups = 0;
    };

    const Graph& g;
    int k;
    std::vector<Cut> cuts;
    std::vector<std::vector<int>> cuts_of_edge;
    std::vector<int> pair_alive;
    int dead_pairs = 0;
    std::vector<int> colors;

    RdSearch(const Graph& graph, int num_colors) : g(graph), k(num_colors) {
        int n = g.vertex_count();
        colors.assign(static_cast<size_t>(g.edge_count()), 0);
        cuts_of_edge.assign(static_cast<size_t>(g.edge_count()), {});
        std::map<uint64_t, int> cut_index;  // edge bitmask -> index
        std::vector<std::vector<std::pair<uint64_t, int>>> per_pair;  // (mask, cut idx)
        int pair_count = n * (n - 1) / 2;
        per_pair.resize(static_cast<size_t>(pair_count));
        auto pair_id = [n](int u, int v) { return u * n + v - (u + 1) * (u + 2) / 2; };
        // Enumerate bipartitions once (vertex 0 on the inside).
        for (uint32_t mask = 1; mask + 1 < (1u << n); mask += 2) {
            std::vector<int> cross = crossing_edges_of_mask(g, mask);
            uint64_t emask = 0;
            for (int e : cross) emask |= 1ull << e;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (((mask >> u) & 1u) == ((mask >> v) & 1u)) continue;
                    per_pair[static_cast<size_t>(pair_id(u, v))].push_back({emask, -1});
                }
            }
            cut_index.emplace(emask, -1);
        }
        // Keep only inclusion-minimal cuts per pair; register those globally.
        pair_alive.assign(static_cast<size_t>(pair_count), 0);
        for (int p = 0; p < pair_count; ++p) {
            auto& list = per_pair[static_cast<size_t>(p)];
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            for (auto& [m1, idx] : list) {
                bool minimal = true;
                for (auto& [m2, idx2] : list) {
                    if (m2 != m1 && (m1 & m2) == m2) {
                        minimal = false;
                        break;
                    }
                }
                if (!minimal) continue;
                auto it = cut_index.find(m1);
                if (it->second < 0) {
                    Cut c;
                    for (int e = 0; e < g.edge_count(); ++e)
                        if ((m1 >> e) & 1ull) c.edges.push_back(e);
                    c.color_count.assign(static_cast<size_t>(k + 1), 0);
                    it->second = static_cast<int>(cuts.size());
                    for (int e : c.edges) cuts_of_edge[static_cast<size_t>(e)].push_back(it->second);
                    cuts.push_back(std::move(c));
                }
                cuts[static_cast<size_t>(it->second)].pairs.push_back(p);
                ++pair_alive[static_cast<size_t>(p)];
            }
        }
    }

    void apply(int e, int c, int dir) {
        for (int ci : cuts_of_edge[static_cast<size_t>(e)]) {
            Cut& cut = cuts[static_cast<size_t>(ci)];
            int& cnt = cut.color_count[static_cast<size_t>(c)];
            if (dir > 0) {
                if (++cnt == 2 && ++cut.dups == 1) {
                    for (int p : cut.pairs)
                        if (--pair_alive[static_cast<size_t>(p)] == 0) ++dead_pairs;
                }
            } else {
                if (cnt-- == 2 && --cut.dups == 0) {
                    for (int p : cut.pairs)
                        if (pair_alive[static_cast<size_t>(p)]++ == 0) --dead_pairs;
                }
            }
        }
    }

    bool search(int e, int max_used) {
        if (e == g.edge_count()) return dead_pairs == 0;
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            colors[static_cast<size_t>(e)] = c;
            apply(e, c, +1);
            if (dead_pairs == 0 && search(e + 1, std::max(max_used, c))) return true;
            apply(e, c, -1);
            colors[static_cast<size_t>(e)] = 0;
        }
        return false;
    }

    std::optional<EdgeColoring> run() {
        if (g.vertex_count() >= 2 && dead_pairs == 0 && search(0, 0)) return EdgeColoring{k, colors};
        if (g.vertex_count() < 2) return EdgeColoring{k, colors};
        return std::nullopt;
    }
};

}  // namespace

std::optional<EdgeColoring> rd_coloring_search(const Graph& g, int k) {
    if (!is_connected(g)) throw std::invalid_argument("rd search requires a connected graph");
    if (g.vertex_count() > 20) throw std::invalid_argument("rd search limited to n <= 20");
    RdSearch s(g, k);
    return s.run();
}

RdResult rd_exact(const Graph& g, int max_edges) {
    if (!is_connected(g)) throw std::invalid_argument("rd_exact requires a connected graph");
    RdResult r;
    if (g.vertex_count() <= 1) {
        r.value = 0;
        r.witness = EdgeColoring{0, {}};
        r.bracket = {0, 0};
        return r;
    }
    auto blks = blocks(g);
    std::vector<int> full_colors(static_cast<size_t>(g.edge_count()), 1);
    int best = 1;
    bool over_budget = false;
    for (const auto& b : blks) {
        if (b.graph.edge_count() == 1) continue;  // bridge: one color suffices
        if (b.graph.edge_count() > max_edges) {
            over_budget = true;
            continue;
        }
        int lower = upper_edge_connectivity(b.graph).value;
        int delta = degree_profile(b.graph).max_degree;
        int stop = 3 * delta / 2;  // chi' bound guarantees success by then
        std::optional<EdgeColoring> witness;
        int value = -1;
        for (int k = std::max(1, lower); k <= stop; ++k) {
            RdSearch s(b.graph, k);
            witness = s.run();
            if (witness) {
                value = k;
                break;
            }
        }
        if (!witness) throw std::logic_error("rd search exceeded its theoretical upper bound");
        best = std::max(best, value);
        for (int e = 0; e < b.graph.edge_count(); ++e)
            full_colors[static_cast<size_t>(b.edge_map[static_cast<size_t>(e)])] = witness->colors[static_cast<size_t>(e)];
    }
    if (!over_budget) {
        r.value = best;
        r.witness = EdgeColoring{best, std::move(full_colors)};
        r.bracket = {best, best};
        return r;
    }
    int lambda_plus = upper_edge_connectivity(g).value;
    int delta = degree_profile(g).max_degree;
    int upper = 3 * lambda_plus / 2;
    if (g.is_simple()) {
        upper = std::min(upper, delta + 1);
        upper = std::min(upper, g.vertex_count() + lambda_plus - delta - 1);
    }
    r.bracket = {std::max(best, lambda_plus), upper};
    return r;
}

EdgeColoring rd_upper_vertex_removal(const Graph& g, int u) {
    if (!g.is_simple()) throw std::invalid_argument("vertex-removal bound requires a simple graph");
    if (!is_connected(g)) throw std::invalid_argument("vertex-removal bound requires a connected graph");
    if (u < 0 || u >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (g.vertex_count() < 2) return {0, {}};

    std::vector<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != u) rest.push_back(v);
    Subgraph h = induced_subgraph(g, rest);
    int delta_h = degree_profile(h.graph).max_degree;

    // Class-1 refinement: one fewer color when G-u is provably Class 1 and
    // no neighbor of u has full degree in it.
    bool refined = false;
    if (h.graph.edge_count() > 0 && class_one_sufficient(h.graph)) {
        refined = true;
        for (int e : g.incident_edges(u)) {
            int w = g.other_end(e, u);
            int w_in_h = static_cast<int>(std::lower_bound(h.vertex_map.begin(), h.vertex_map.end(), w) - h.vertex_map.begin());
            if (h.graph.degree(w_in_h) > delta_h - 1) {
                refined = false;
                break;
            }
        }
    }

    EdgeColoring h_col;
    int budget;
    if (refined) {
        auto chi = chromatic_index_exact(h.graph, h.graph.edge_count());
        assert(chi.value && *chi.value == delta_h);
        h_col = *chi.witness;
        budget = delta_h;
    } else {
        h_col = vizing_proper_coloring(h.graph);
        budget = delta_h + 1;
    }

    EdgeColoring out;
    out.num_colors = std::max(1, budget);
    out.colors.assign(static_cast<size_t>(g.edge_count()), 0);
    for (int e = 0; e < h.graph.edge_count(); ++e)
        out.colors[static_cast<size_t>(h.edge_map[static_cast<size_t>(e)])] = h_col.colors[static_cast<size_t>(e)];
    for (int e : g.incident_edges(u)) {
        int w = g.other_end(e, u);
        uint64_t used = 0;
        for (int f : g.incident_edges(w)) {
            int c = out.colors[static_cast<size_t>(f)];
            if (c > 0) used |= 1ull << c;
        }
        int chosen = 0;
        for (int c = 1; c <= out.num_colors; ++c) {
            if (!(used & (1ull << c))) {
                chosen = c;
                break;
            }
        }
        if (chosen == 0) throw std::logic_error("vertex-removal extension: no free color at neighbor");
        out.colors[static_cast<size_t>(e)] = chosen;
    }
    if (!verify_rd_coloring(g, out).ok()) throw std::logic_error("vertex-removal coloring failed verification");
    return out;
}

namespace {

// Leaf of the shrink tree: Shannon-color the piece minus its special
// vertex, then give the special vertex's edges colors absent at the other
// endpoint. Writes into `colors`, indexed by original edge id.
void color_shrink_leaf(const DecompNode& node, int lambda_plus, int palette, std::vector<int>& colors) {
    const Graph& h = node.graph;
    int special = -1;
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (h.degree(v) >= lambda_plus + 1) {
            if (special != -1) throw std::logic_error("shrink leaf has two high-degree vertices");
            special = v;
        }
    }
    if (special == -1) {
        EdgeColoring c = shannon_proper_coloring(h);
        for (int e = 0; e < h.edge_count(); ++e)
            colors[static_cast<size_t>(node.edge_map[static_cast<size_t>(e)])] = c.colors[static_cast<size_t>(e)];
        return;
    }
    std::vector<int> rest;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (v != special) rest.push_back(v);
    Subgraph hp = induced_subgraph(h, rest);
    EdgeColoring c = shannon_proper_coloring(hp.graph);
    for (int e = 0; e < hp.graph.edge_count(); ++e) {
        int h_edge = hp.edge_map[static_cast<size_t>(e)];
        colors[static_cast<size_t>(node.edge_map[static_cast<size_t>(h_edge)])] = c.colors[static_cast<size_t>(e)];
    }
    for (int e : h.incident_edges(special)) {
        int w = h.other_end(e, special);
        uint64_t used = 0;
        for (int f : h.incident_edges(w)) {
            int col = colors[static_cast<size_t>(node.edge_map[static_cast<size_t>(f)])];
            if (col > 0) used |= 1ull << col;
        }
        int chosen = 0;
        for (int col = 1; col <= palette; ++col) {
            if (!(used & (1ull << col))) {
                chosen = col;
                break;
            }
        }
        if (chosen == 0) throw std::logic_error("shrink leaf extension: no free color");
        colors[static_cast<size_t>(node.edge_map[static_cast<size_t>(e)])] = chosen;
    }
}

void verify_node_coloring(const DecompNode& node, int palette, const std::vector<int>& colors, const char* stage) {
    EdgeColoring c;
    c.num_colors = palette;
    c.colors.resize(static_cast<size_t>(node.graph.edge_count()));
    for (int e = 0; e < node.graph.edge_count(); ++e)
        c.colors[static_cast<size_t>(e)] = colors[static_cast<size_t>(node.edge_map[static_cast<size_t>(e)])];
    auto check = verify_rd_coloring(node.graph, c);
    if (!check.ok()) {
        std::ostringstream os;
        os << "three-halves construction: " << stage << " coloring fails on pair {"
           << check.failing_pair->first << "," << check.failing_pair->second
           << "} of a piece with " << node.graph.vertex_count() << " vertices";
        if (!node.provenance.empty())
            os << " (last split pivot {" << node.provenance.back().u << "," << node.provenance.back().v << "})";
        throw std::logic_error(os.str());
    }
}

// Post-order coloring of the shrink tree; children are glued with a
// global color bijection matching the shared cut edges.
void color_shrink_node(const DecompNode& node, int lambda_plus, int palette, std::vector<int>& colors) {
    if (node.is_leaf()) {
        color_shrink_leaf(node, lambda_plus, palette, colors);
        verify_node_coloring(node, palette, colors, "leaf");
        return;
    }
    std::vector<int> left_colors(colors.size(), 0);
    std::vector<int> right_colors(colors.size(), 0);
    color_shrink_node(*node.left, lambda_plus, palette, left_colors);
    color_shrink_node(*node.right, lambda_plus, palette, right_colors);

    // Bijection on [palette] sending right-side cut colors to left-side ones.
    std::vector<int> perm(static_cast<size_t>(palette + 1), 0);
    std::vector<bool> target_used(static_cast<size_t>(palette + 1), false);
    for (int e : node.cut_edges) {
        int a = right_colors[static_cast<size_t>(e)];
        int b = left_colors[static_cast<size_t>(e)];
        if (a <= 0 || b <= 0) throw std::logic_error("cut edge uncolored in a child piece");
        if (perm[static_cast<size_t>(a)] != 0 && perm[static_cast<size_t>(a)] != b)
            throw std::logic_error("cut colors are not injective in a child piece");
        perm[static_cast<size_t>(a)] = b;
        target_used[static_cast<size_t>(b)] = true;
    }
    int next_target = 1;
    for (int c = 1; c <= palette; ++c) {
        if (perm[static_cast<size_t>(c)] != 0) continue;
        while (target_used[static_cast<size_t>(next_target)]) ++next_target;
        perm[static_cast<size_t>(c)] = next_target;
        target_used[static_cast<size_t>(next_target)] = true;
    }
    for (int e = 0; e < node.graph.edge_count(); ++e) {
        int orig = node.edge_map[static_cast<size_t>(e)];
        if (left_colors[static_cast<size_t>(orig)] > 0) {
            colors[static_cast<size_t>(orig)] = left_colors[static_cast<size_t>(orig)];
        } else {
            colors[static_cast<size_t>(orig)] = perm[static_cast<size_t>(right_colors[static_cast<size_t>(orig)])];
        }
    }
    verify_node_coloring(node, palette, colors, "glue");
}

}  // namespace

EdgeColoring rd_upper_three_halves(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("three-halves bound requires a connected graph");
    if (g.edge_count() == 0) return {0, {}};
    int lambda_plus = upper_edge_connectivity(g).value;
    int palette = 3 * lambda_plus / 2;
    auto tree = shrink_tree(g, lambda_plus);
    std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);
    color_shrink_node(*tree, lambda_plus, palette, colors);
    return EdgeColoring{palette, std::move(colors)};
}

EdgeColoring rd_upper_min_bound(const Graph& g) {
    if (!g.is_simple() || !is_connected(g)) throw std::invalid_argument("min-bound requires a simple connected graph");
    auto prof = degree_profile(g);
    int v = 0;
    for (; v < g.vertex_count(); ++v)
        if (g.degree(v) == prof.max_degree) break;
    EdgeColoring c = rd_upper_vertex_removal(g, v);
    int lambda_plus = g.vertex_count() >= 2 ? upper_edge_connectivity(g).value : 0;
    int bound = std::min(g.vertex_count() + lambda_plus - prof.max_degree - 1, prof.max_degree + 1);
    if (g.edge_count() > 0 && c.num_colors > bound) throw std::logic_error("min-bound coloring exceeded its budget");
    return c;
}

BoundReport bound_report(const Graph& g, int max_rd_edges, int max_chi_edges) {
    if (!is_connected(g)) throw std::invalid_argument("bound_report requires a connected graph");
    BoundReport rep;
    if (g.vertex_count() < 2) {
        rep.rd_value = 0;
        rep.rd_bracket = {0, 0};
        rep.chromatic_index = chromatic_index_exact(g, max_chi_edges);
        return rep;
    }
    rep.lambda_plus = upper_edge_connectivity(g).value;
    rep.chromatic_index = chromatic_index_exact(g, max_chi_edges);
    int delta = degree_profile(g).max_degree;
    bool small = g.vertex_count() <= 15;

    if (g.is_simple()) {
        BoundEntry e;
        e.label = "delta_plus_one";
        e.value = delta + 1;
        EdgeColoring proper = vizing_proper_coloring(g);
        if (small && verify_rd_coloring(g, proper).ok()) {
            e.verified = true;
            e.witness = std::move(proper);
        }
        rep.upper_bounds.push_back(std::move(e));
    }
    if (rep.chromatic_index.value) {
        BoundEntry e;
        e.label = "chromatic_index";
        e.value = *rep.chromatic_index.value;
        if (small && verify_rd_coloring(g, *rep.chromatic_index.witness).ok()) {
            e.verified = true;
            e.witness = rep.chromatic_index.witness;
        }
        rep.upper_bounds.push_back(std::move(e));
    }
    if (small) {
        BoundEntry e;
        e.label = "three_halves_lambda_plus";
        e.value = 3 * rep.lambda_plus / 2;
        e.witness = rd_upper_three_halves(g);  // verified internally
        e.verified = true;
        rep.upper_bounds.push_back(std::move(e));
        if (g.is_simple()) {
            BoundEntry m;
            m.label = "min_bound";
            m.value = std::min(g.vertex_count() + rep.lambda_plus - delta - 1, delta + 1);
            m.witness = rd_upper_min_bound(g);
            m.verified = true;
            rep.upper_bounds.push_back(std::move(m));
        }
    }
    RdResult rd = rd_exact(g, max_rd_edges);
    rep.rd_value = rd.value;
    rep.rd_bracket = rd.bracket;
    if (!rd.value) {
        int upper = rd.bracket.second;
        for (const auto& b : rep.upper_bounds)
            if (b.verified) upper = std::min(upper, b.value);
        rep.rd_bracket.second = upper;
    }
    return rep;
}

// --- rainbow vertex-disconnection ---

namespace {

bool vertex_cut_separates(const Graph& g, uint32_t s_mask, int x, int y, bool drop_xy_edge) {
    std::vector<bool> vis(static_cast<size_t>(g.vertex_count()), false);
    std::vector<int> stack{x};
    vis[static_cast<size_t>(x)] = true;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int e : g.incident_edges(a)) {
            int b = g.other_end(e, a);
            if (drop_xy_edge && ((a == x && b == y) || (a == y && b == x))) continue;
            if ((s_mask >> b) & 1u) continue;
            if (!vis[static_cast<size_t>(b)]) {
                vis[static_cast<size_t>(b)] = true;
                stack.push_back(b);
            }
        }
    }
    return !vis[static_cast<size_t>(y)];
}

bool variant_rainbow(const VertexColoring& c, uint32_t mask) {
    uint64_t seen = 0;
    for (int v = 0; v < 32; ++v) {
        if (!((mask >> v) & 1u)) continue;
        uint64_t bit = 1ull << c.colors[static_cast<size_t>(v)];
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

}  // namespace

std::optional<std::vector<int>> exists_rainbow_vertex_cut(const Graph& g, const VertexColoring& c, int x, int y) {
    if (x == y) throw std::invalid_argument("rainbow vertex cut requires x != y");
    int n = g.vertex_count();
    if (n > 25) throw std::invalid_argument("vertex-cut enumeration limited to n <= 25");
    bool adj = g.adjacent(x, y);
    uint32_t forbidden = (1u << x) | (1u << y);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (mask & forbidden) continue;
        if (!vertex_cut_separates(g, mask, x, y, adj)) continue;
        bool ok = adj ? (variant_rainbow(c, mask | (1u << x)) || variant_rainbow(c, mask | (1u << y)))
                      : variant_rainbow(c, mask);
        if (!ok) continue;
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) out.push_back(v);
        return out;
    }
    return std::nullopt;
}

bool verify_rvd_coloring(const Graph& g, const VertexColoring& c) {
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = x + 1; y < g.vertex_count(); ++y)
            if (!exists_rainbow_vertex_cut(g, c, x, y)) return false;
    return true;
}

namespace {

// Vertex-coloring analogue of RdSearch. For adjacent pairs a cut carries
// two variants (S+x and S+y) and is doomed when both have duplicates.
struct RvdSearch {
    struct Variant {
        std::vector<int> vertices;
        std::vector<int> color_count;
        int dups = 0;
        int cut = -1;
    };
    struct Cut {
        int pair = -1;
        int num_variants = 0;
        int doomed_variants = 0;
    };

    const Graph& g;
    int k;
    std::vector<Variant> variants;
    std::vector<Cut> cuts;
    std::vector<std::vector<int>> variants_of_vertex;
    std::vector<int> pair_alive;
    int dead_pairs = 0;
    std::vector<int> colors;

    RvdSearch(const Graph& graph, int num_colors) : g(graph), k(num_colors) {
        int n = g.vertex_count();
        colors.assign(static_cast<size_t>(n), 0);
        variants_of_vertex.assign(static_cast<size_t>(n), {});
        int pair_count = n * (n - 1) / 2;
        pair_alive.assign(static_cast<size_t>(pair_count), 0);
        int p = -1;
        for (int x = 0; x < n; ++x) {
            for (int y = x + 1; y < n; ++y) {
                ++p;
                bool adj = g.adjacent(x, y);
                uint32_t forbidden = (1u << x) | (1u << y);
                std::vector<uint32_t> seps;
                for (uint32_t mask = 0; mask < (1u << n); ++mask) {
                    if (mask & forbidden) continue;
                    if (vertex_cut_separates(g, mask, x, y, adj)) seps.push_back(mask);
                }
                for (uint32_t m1 : seps) {
                    bool minimal = true;
                    for (uint32_t m2 : seps) {
                        if (m2 != m1 && (m1 & m2) == m2) {
                            minimal = false;
                            break;
                        }
                    }
                    if (!minimal) continue;
                    Cut cut;
                    cut.pair = p;
                    int ci = static_cast<int>(cuts.size());
                    auto add_variant = [&](uint32_t vm) {
                        Variant var;
                        var.cut = ci;
                        var.color_count.assign(static_cast<size_t>(k + 1), 0);
                        for (int v = 0; v < n; ++v)
                            if ((vm >> v) & 1u) var.vertices.push_back(v);
                        int vi = static_cast<int>(variants.size());
                        for (int v : var.vertices) variants_of_vertex[static_cast<size_t>(v)].push_back(vi);
                        variants.push_back(std::move(var));
                        ++cut.num_variants;
                    };
                    if (adj) {
                        add_variant(m1 | (1u << x));
                        add_variant(m1 | (1u << y));
                    } else {
                        add_variant(m1);
                    }
                    cuts.push_back(cut);
                    ++pair_alive[static_cast<size_t>(p)];
                }
            }
        }
    }

    void apply(int v, int c, int dir) {
        for (int vi : variants_of_vertex[static_cast<size_t>(v)]) {
            Variant& var = variants[static_cast<size_t>(vi)];
            int& cnt = var.color_count[static_cast<size_t>(c)];
            if (dir > 0) {
                if (++cnt == 2 && ++var.dups == 1) {
                    Cut& cut = cuts[static_cast<size_t>(var.cut)];
                    if (++cut.doomed_variants == cut.num_variants)
                        if (--pair_alive[static_cast<size_t>(cut.pair)] == 0) ++dead_pairs;
                }
            } else {
                if (cnt-- == 2 && --var.dups == 0) {
                    Cut& cut = cuts[static_cast<size_t>(var.cut)];
                    if (cut.doomed_variants-- == cut.num_variants)
                        if (pair_alive[static_cast<size_t>(cut.pair)]++ == 0) --dead_pairs;
                }
            }
        }
    }

    bool search(int v, int max_used) {
        if (v == g.vertex_count()) return dead_pairs == 0;
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            colors[static_cast<size_t>(v)] = c;
            apply(v, c, +1);
            if (dead_pairs == 0 && search(v + 1, std::max(max_used, c))) return true;
            apply(v, c, -1);
            colors[static_cast<size_t>(v)] = 0;
        }
        return false;
    }

    std::optional<VertexColoring> run() {
        if (dead_pairs > 0) return std::nullopt;
        if (search(0, 0)) return VertexColoring{k, colors};
        return std::nullopt;
    }
};

}  // namespace

RvdResult rvd_exact(const Graph& g, int max_vertices) {
    if (!is_connected(g)) throw std::invalid_argument("rvd_exact requires a connected graph");
    RvdResult r;
    if (g.vertex_count() <= 1) {
        r.value = g.vertex_count();  // one color for the single vertex
        r.witness = VertexColoring{g.vertex_count(), std::vector<int>(static_cast<size_t>(g.vertex_count()), 1)};
        return r;
    }
    if (g.vertex_count() > max_vertices) return r;
    for (int k = 1; k <= g.vertex_count(); ++k) {
        RvdSearch s(g, k);
        if (auto w = s.run()) {
            r.value = k;
            r.witness = std::move(w);
            return r;
        }
    }
    throw std::logic_error("rvd search exceeded its theoretical upper bound");
}

LineCheckReport rd_vs_rvd_line_check(const Graph& g, int max_edges, int max_rvd_vertices) {
    if (!g.is_simple() || !is_connected(g)) throw std::invalid_argument("line check requires a simple connected graph");
    LineCheckReport rep;
    rep.rd = rd_exact(g, max_edges);
    Graph l = line_graph(g);
    rep.rvd_line = rvd_exact(l, max_rvd_vertices);
    if (rep.rd.value && rep.rvd_line.value) {
        rep.inequality_holds = *rep.rd.value <= *rep.rvd_line.value;
        int delta = g.vertex_count() > 0 ? degree_profile(g).min_degree : 0;
        if (delta >= 4 && *rep.rd.value == *rep.rvd_line.value) {
            rep.theorem_min_degree_premise = true;
            auto chi = chromatic_index_exact(g);
            if (chi.value) rep.equality_implies_chi_holds = (*rep.rd.value == *chi.value);
        }
    }
    return rep;
}

}  // namespace rd
