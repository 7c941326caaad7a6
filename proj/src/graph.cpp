#include "rd/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rd {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    incident_.resize(static_cast<size_t>(n_));
    edges_.reserve(edge_list.size());
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        int id = static_cast<int>(edges_.size());
        edges_.push_back({u, v});
        incident_[static_cast<size_t>(u)].push_back(id);
        incident_[static_cast<size_t>(v)].push_back(id);
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) simple_ = false;
    }
}

bool Graph::adjacent(int u, int v) const {
    for (int e : incident_[static_cast<size_t>(u)]) {
        if (other_end(e, u) == v) return true;
    }
    return false;
}

int Graph::other_end(int edge_id, int v) const {
    const Edge& e = edges_[static_cast<size_t>(edge_id)];
    if (e.u == v) return e.v;
    if (e.v == v) return e.u;
    throw std::invalid_argument("vertex not an endpoint of edge");
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees.resize(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) p.degrees[static_cast<size_t>(v)] = g.degree(v);
    if (g.vertex_count() == 0) return p;
    p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
    return p;
}

std::vector<int> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<size_t>(g.vertex_count()), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        comp[static_cast<size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident_edges(v)) {
                int w = g.other_end(e, v);
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto comp = connected_components(g);
    return *std::max_element(comp.begin(), comp.end()) == 0;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<int> vmap = vertices;
    std::sort(vmap.begin(), vmap.end());
    vmap.erase(std::unique(vmap.begin(), vmap.end()), vmap.end());
    for (size_t i = 0; i < vmap.size(); ++i) index[static_cast<size_t>(vmap[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> emap;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (index[static_cast<size_t>(u)] >= 0 && index[static_cast<size_t>(v)] >= 0) {
            edges.push_back({index[static_cast<size_t>(u)], index[static_cast<size_t>(v)]});
            emap.push_back(e);
        }
    }
    return {Graph(static_cast<int>(vmap.size()), std::move(edges)), std::move(vmap), std::move(emap)};
}

Subgraph max_degree_subgraph(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("max_degree_subgraph requires a simple graph");
    auto prof = degree_profile(g);
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == prof.max_degree) keep.push_back(v);
    }
    return induced_subgraph(g, keep);
}

namespace {

// Iterative DFS computing biconnected components via lowpoints. Parallel
// edges count as cycles because we skip only the tree edge id itself.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low, parent_edge;
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> block_edges;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          disc(static_cast<size_t>(graph.vertex_count()), -1),
          low(static_cast<size_t>(graph.vertex_count()), 0),
          parent_edge(static_cast<size_t>(graph.vertex_count()), -1) {}

    void run(int root) {
        struct Frame {
            int v;
            size_t next;
        };
        std::vector<Frame> stack;
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident_edges(f.v);
            if (f.next < inc.size()) {
                int e = inc[f.next++];
                if (e == parent_edge[static_cast<size_t>(f.v)]) continue;
                int w = g.other_end(e, f.v);
                if (disc[static_cast<size_t>(w)] == -1) {
                    edge_stack.push_back(e);
                    parent_edge[static_cast<size_t>(w)] = e;
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                    stack.push_back({w, 0});
                } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(f.v)]) {
                    edge_stack.push_back(e);
                    low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
                }
            } else {
                int v = f.v;
                stack.pop_back();
                if (stack.empty()) break;
                int p = stack.back().v;
                low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
                if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(p)]) {
                    // p is a cut vertex (or the root); pop one block.
                    std::vector<int> blk;
                    int pe = parent_edge[static_cast<size_t>(v)];
                    while (true) {
                        int e = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(e);
                        if (e == pe) break;
                    }
                    block_edges.push_back(std::move(blk));
                }
            }
        }
    }
};

}  // namespace

std::vector<Subgraph> blocks(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("blocks requires a connected graph");
    if (g.vertex_count() == 0) return {};
    BlockFinder bf(g);
    bf.run(0);
    std::vector<Subgraph> out;
    for (auto& blk : bf.block_edges) {
        std::sort(blk.begin(), blk.end());
        std::vector<int> verts;
        for (int e : blk) {
            verts.push_back(g.edge(e).u);
            verts.push_back(g.edge(e).v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<int> index(static_cast<size_t>(g.vertex_count()), -1);
        for (size_t i = 0; i < verts.size(); ++i) index[static_cast<size_t>(verts[i])] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (int e : blk) {
            edges.push_back({index[static_cast<size_t>(g.edge(e).u)], index[static_cast<size_t>(g.edge(e).v)]});
        }
        out.push_back({Graph(static_cast<int>(verts.size()), std::move(edges)), std::move(verts), std::move(blk)});
    }
    return out;
}

Graph line_graph(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("line_graph requires a simple graph");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        for (size_t i = 0; i < inc.size(); ++i) {
            for (size_t j = i + 1; j < inc.size(); ++j) {
                edges.push_back({inc[i], inc[j]});
            }
        }
    }
    return Graph(g.edge_count(), std::move(edges));
}

Graph complement(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("complement requires a simple graph");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.adjacent(u, v)) edges.push_back({u, v});
        }
    }
    return Graph(g.vertex_count(), std::move(edges));
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph make_star(int n) {
    if (n < 2) throw std::invalid_argument("star requires n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.push_back({0, v});
    return Graph(n, std::move(edges));
}

Graph make_wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel requires n >= 4");
    std::vector<std::pair<int, int>> edges;
    int rim = n - 1;
    for (int i = 0; i < rim; ++i) edges.push_back({i, (i + 1) % rim});
    for (int i = 0; i < rim; ++i) edges.push_back({i, rim});
    return Graph(n, std::move(edges));
}

Graph make_grid(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid requires m,n >= 1");
    std::vector<std::pair<int, int>> edges;
    auto id = [n](int r, int c) { return r * n + c; };
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
            if (c + 1 < n) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < m) edges.push_back({id(r, c), id(r + 1, c)});
        }
    }
    return Graph(m * n, std::move(edges));
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("complete multipartite requires k >= 2 parts");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("part sizes must be positive");
        n += p;
    }
    std::vector<int> part_of;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of.push_back(static_cast<int>(i));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<size_t>(u)] != part_of[static_cast<size_t>(v)]) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph make_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
    for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
    return Graph(10, std::move(edges));
}

Graph make_family(const std::string& spec) {
    std::string name = spec;
    std::vector<int> args;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::stringstream ss(spec.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                args.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad family parameter: " + tok);
            }
        }
    }
    auto want = [&](size_t k) {
        if (args.size() != k) throw std::invalid_argument("family '" + name + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (name == "petersen") {
        want(0);
        return make_petersen();
    }
    if (name == "path") {
        want(1);
        return make_path(args[0]);
    }
    if (name == "cycle") {
        want(1);
        return make_cycle(args[0]);
    }
    if (name == "complete") {
        want(1);
        return make_complete(args[0]);
    }
    if (name == "star") {
        want(1);
        return make_star(args[0]);
    }
    if (name == "wheel") {
        want(1);
        return make_wheel(args[0]);
    }
    if (name == "grid") {
        want(2);
        return make_grid(args[0], args[1]);
    }
    if (name == "complete_multipartite") {
        if (args.size() < 2) throw std::invalid_argument("complete_multipartite takes >= 2 parameters");
        return make_complete_multipartite(args);
    }
    throw std::invalid_argument("unknown family: " + name);
}

}  // namespace rd
