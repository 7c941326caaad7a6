#include "rd/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace rd {

namespace {

// Unit-capacity max-flow state on an undirected multigraph. flow[e] is
// +1/-1/0 relative to the stored edge orientation (u -> v).
struct UnitFlow {
    const Graph& g;
    std::vector<int> flow;

    explicit UnitFlow(const Graph& graph) : g(graph), flow(static_cast<size_t>(graph.edge_count()), 0) {}

    bool residual(int e, int from) const {
        auto [a, b] = g.edge(e);
        if (from == a) return flow[static_cast<size_t>(e)] < 1;
        return flow[static_cast<size_t>(e)] > -1;
    }

    void push(int e, int from) {
        auto [a, b] = g.edge(e);
        flow[static_cast<size_t>(e)] += (from == a) ? 1 : -1;
    }

    // DFS augmenting path, incident edges scanned in ascending id order.
    bool augment(int s, int t) {
        std::vector<int> via_edge(static_cast<size_t>(g.vertex_count()), -1);
        std::vector<bool> visited(static_cast<size_t>(g.vertex_count()), false);
        std::vector<int> stack{s};
        visited[static_cast<size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == t) break;
            for (int e : g.incident_edges(v)) {
                int w = g.other_end(e, v);
                if (!visited[static_cast<size_t>(w)] && residual(e, v)) {
                    visited[static_cast<size_t>(w)] = true;
                    via_edge[static_cast<size_t>(w)] = e;
                    stack.push_back(w);
                }
            }
        }
        if (!visited[static_cast<size_t>(t)]) return false;
        int v = t;
        while (v != s) {
            int e = via_edge[static_cast<size_t>(v)];
            int w = g.other_end(e, v);
            push(e, w);
            v = w;
        }
        return true;
    }

    std::vector<bool> reachable(int s) const {
        std::vector<bool> vis(static_cast<size_t>(g.vertex_count()), false);
        std::vector<int> stack{s};
        vis[static_cast<size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident_edges(v)) {
                int w = g.other_end(e, v);
                if (!vis[static_cast<size_t>(w)] && residual(e, v)) {
                    vis[static_cast<size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        return vis;
    }
};

UnitFlow run_max_flow(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("local edge connectivity requires u != v");
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw std::invalid_argument("vertex out of range");
    UnitFlow f(g);
    while (f.augment(u, v)) {
    }
    return f;
}

}  // namespace

int local_edge_connectivity(const Graph& g, int u, int v) {
    UnitFlow f = run_max_flow(g, u, v);
    int value = 0;
    for (int e : g.incident_edges(u)) {
        auto [a, b] = g.edge(e);
        value += (a == u) ? f.flow[static_cast<size_t>(e)] : -f.flow[static_cast<size_t>(e)];
    }
    return value;
}

CutCertificate min_edge_cut(const Graph& g, int u, int v) {
    UnitFlow f = run_max_flow(g, u, v);
    auto reach = f.reachable(u);
    CutCertificate cert;
    cert.u = u;
    cert.v = v;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (reach[static_cast<size_t>(x)]) cert.side.push_back(x);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        if (reach[static_cast<size_t>(a)] != reach[static_cast<size_t>(b)]) cert.crossing_edges.push_back(e);
    }
    return cert;
}

UpperEdgeConnectivity upper_edge_connectivity(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("upper edge connectivity requires a nontrivial graph");
    UpperEdgeConnectivity best;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            int l = local_edge_connectivity(g, u, v);
            if (l > best.value) {
                best.value = l;
                best.attaining_pair = {u, v};
            }
        }
    }
    return best;
}

int global_edge_connectivity(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("edge connectivity requires a nontrivial graph");
    int best = -1;
    for (int v = 1; v < g.vertex_count(); ++v) {
        int l = local_edge_connectivity(g, 0, v);
        if (best < 0 || l < best) best = l;
    }
    return best;
}

ShrinkResult shrink(const Graph& g, const std::vector<int>& x) {
    std::vector<bool> in_x(static_cast<size_t>(g.vertex_count()), false);
    int count = 0;
    for (int v : x) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("shrink vertex out of range");
        if (!in_x[static_cast<size_t>(v)]) {
            in_x[static_cast<size_t>(v)] = true;
            ++count;
        }
    }
    if (count == 0 || count == g.vertex_count()) throw std::invalid_argument("shrink set must be a nonempty proper subset");
    ShrinkResult r;
    r.vertex_map.assign(static_cast<size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_x[static_cast<size_t>(v)]) r.vertex_map[static_cast<size_t>(v)] = next++;
    r.merged_vertex = next;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in_x[static_cast<size_t>(v)]) r.vertex_map[static_cast<size_t>(v)] = next;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        if (in_x[static_cast<size_t>(a)] && in_x[static_cast<size_t>(b)]) continue;
        edges.push_back({r.vertex_map[static_cast<size_t>(a)], r.vertex_map[static_cast<size_t>(b)]});
        r.edge_map.push_back(e);
    }
    r.graph = Graph(next + 1, std::move(edges));
    return r;
}

namespace {

std::vector<int> special_vertices(const Graph& g, int lambda_plus) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= lambda_plus + 1) out.push_back(v);
    return out;
}

void split_node(DecompNode& node, int lambda_plus) {
    auto specials = special_vertices(node.graph, lambda_plus);
    if (specials.size() < 2) return;

    // Lexicographically smallest special pair whose min cut fits under
    // lambda+; piece-local order equals original label order because
    // shrunk vertices sit last and are never special.
    std::optional<CutCertificate> chosen;
    for (size_t i = 0; i < specials.size() && !chosen; ++i) {
        for (size_t j = i + 1; j < specials.size() && !chosen; ++j) {
            CutCertificate cert = min_edge_cut(node.graph, specials[i], specials[j]);
            if (static_cast<int>(cert.crossing_edges.size()) <= lambda_plus) chosen = std::move(cert);
        }
    }
    if (!chosen) throw std::logic_error("shrinking decomposition: no special pair admits a cut within lambda+");

    std::vector<bool> on_side(static_cast<size_t>(node.graph.vertex_count()), false);
    for (int v : chosen->side) on_side[static_cast<size_t>(v)] = true;
    std::vector<int> side_u, side_v;
    for (int v = 0; v < node.graph.vertex_count(); ++v)
        (on_side[static_cast<size_t>(v)] ? side_u : side_v).push_back(v);

    node.cut_edges.clear();
    for (int e : chosen->crossing_edges) node.cut_edges.push_back(node.edge_map[static_cast<size_t>(e)]);
    int orig_u = node.vertex_map[static_cast<size_t>(chosen->u)];
    int orig_v = node.vertex_map[static_cast<size_t>(chosen->v)];

    auto make_child = [&](const std::vector<int>& shrunk_side, int kept) {
        ShrinkResult sr = shrink(node.graph, shrunk_side);
        auto child = std::make_unique<DecompNode>();
        child->graph = std::move(sr.graph);
        child->vertex_map.assign(static_cast<size_t>(child->graph.vertex_count()), -1);
        for (int v = 0; v < node.graph.vertex_count(); ++v) {
            int nv = sr.vertex_map[static_cast<size_t>(v)];
            if (nv != sr.merged_vertex) child->vertex_map[static_cast<size_t>(nv)] = node.vertex_map[static_cast<size_t>(v)];
        }
        for (int e : sr.edge_map) child->edge_map.push_back(node.edge_map[static_cast<size_t>(e)]);
        child->provenance = node.provenance;
        child->provenance.push_back({orig_u, orig_v, node.cut_edges, kept});
        return child;
    };

    node.left = make_child(side_v, 0);   // keeps u's side
    node.right = make_child(side_u, 1);  // keeps v's side
    split_node(*node.left, lambda_plus);
    split_node(*node.right, lambda_plus);
}

void collect_leaves(DecompNode& node, int lambda_plus, std::vector<ShrinkPiece>& out) {
    if (!node.is_leaf()) {
        collect_leaves(*node.left, lambda_plus, out);
        collect_leaves(*node.right, lambda_plus, out);
        return;
    }
    ShrinkPiece piece;
    auto specials = special_vertices(node.graph, lambda_plus);
    if (!specials.empty()) piece.special_vertex = specials.front();
    piece.graph = node.graph;
    piece.vertex_map = node.vertex_map;
    piece.edge_map = node.edge_map;
    piece.provenance = node.provenance;
    out.push_back(std::move(piece));
}

}  // namespace

std::unique_ptr<DecompNode> shrink_tree(const Graph& g, int lambda_plus) {
    if (!is_connected(g)) throw std::invalid_argument("shrinking decomposition requires a connected graph");
    auto root = std::make_unique<DecompNode>();
    root->graph = g;
    root->vertex_map.resize(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) root->vertex_map[static_cast<size_t>(v)] = v;
    root->edge_map.resize(static_cast<size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) root->edge_map[static_cast<size_t>(e)] = e;
    split_node(*root, lambda_plus);
    return root;
}

std::vector<ShrinkPiece> shrinking_decomposition(const Graph& g) {
    int lambda_plus = upper_edge_connectivity(g).value;
    auto tree = shrink_tree(g, lambda_plus);
    std::vector<ShrinkPiece> pieces;
    collect_leaves(*tree, lambda_plus, pieces);
    return pieces;
}

SigmaKBound sigma_k_bound(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k < 1 || n < k + 2) throw std::invalid_argument("sigma_k bound requires n >= k+2 >= 3");
    SigmaKBound r;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) <= k) r.sigma_k += k - g.degree(v);
    }
    // |E| > (k+1)/2*(n-1) - sigma_k/2, evaluated as 2|E| > (k+1)(n-1) - sigma_k.
    r.asserts_lambda_plus_ge_k_plus_1 =
        2LL * g.edge_count() > static_cast<long long>(k + 1) * (n - 1) - r.sigma_k;
    return r;
}

}  // namespace rd
