#ifndef RD_CONNECTIVITY_HPP
#define RD_CONNECTIVITY_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "rd/graph.hpp"

namespace rd {

/// Witness for a u-v edge cut: `side` contains u, `crossing_edges` is
/// exactly delta(side), and removing the crossing edges separates u from v.
struct CutCertificate {
    std::vector<int> side;
    std::vector<int> crossing_edges;
    int u = -1;
    int v = -1;
};

/// lambda(u,v): maximum number of pairwise edge-disjoint u-v paths,
/// computed by unit-capacity max-flow with fixed ascending edge order.
int local_edge_connectivity(const Graph& g, int u, int v);

/// Deterministic minimum u-v cut: source side is the residual-reachable
/// set of the final flow.
CutCertificate min_edge_cut(const Graph& g, int u, int v);

struct UpperEdgeConnectivity {
    int value = 0;
    std::pair<int, int> attaining_pair{-1, -1};
};

/// lambda+(G) = max over pairs of lambda(u,v), with an attaining pair.
UpperEdgeConnectivity upper_edge_connectivity(const Graph& g);

/// lambda(G) = min over pairs of lambda(u,v).
int global_edge_connectivity(const Graph& g);

struct ShrinkResult {
    Graph graph;
    std::vector<int> vertex_map;  // old vertex -> new vertex
    std::vector<int> edge_map;    // new edge id -> old edge id
    int merged_vertex = -1;
};

/// G/X: delete edges inside X, identify X into one vertex (the last new
/// index), keeping crossing edges as parallel edges.
ShrinkResult shrink(const Graph& g, const std::vector<int>& x);

/// One split of the shrinking operation, recorded for provenance.
struct SplitStep {
    int u = -1;                    // pivot pair, in original vertex labels
    int v = -1;
    std::vector<int> cut_edges;    // original edge ids of the chosen min cut
    int side = 0;                  // 0: piece kept u's side, 1: v's side
};

struct ShrinkPiece {
    Graph graph;
    std::vector<int> vertex_map;           // piece vertex -> original vertex, -1 for shrunk
    std::vector<int> edge_map;             // piece edge id -> original edge id
    std::optional<int> special_vertex;     // unique vertex with degree >= lambda+(G)+1
    std::vector<SplitStep> provenance;
};

/// Internal node of the split tree behind shrinking_decomposition; the
/// three-halves coloring reassembles along it.
struct DecompNode {
    Graph graph;
    std::vector<int> vertex_map;  // node vertex -> original vertex, -1 for shrunk
    std::vector<int> edge_map;    // node edge id -> original edge id
    std::vector<SplitStep> provenance;
    // Split data, empty for leaves.
    std::vector<int> cut_edges;   // original edge ids
    std::unique_ptr<DecompNode> left, right;
    bool is_leaf() const { return left == nullptr; }
};

std::unique_ptr<DecompNode> shrink_tree(const Graph& g, int lambda_plus);

/// Repeatedly split pieces containing >= 2 vertices of degree
/// >= lambda+(G)+1 (degrees in the current piece, lambda+ fixed from G)
/// along minimum cuts of size <= lambda+(G).
std::vector<ShrinkPiece> shrinking_decomposition(const Graph& g);

struct SigmaKBound {
    long long sigma_k = 0;
    bool asserts_lambda_plus_ge_k_plus_1 = false;
};

/// Density bound: |E| > (k+1)/2*(n-1) - sigma_k/2 implies lambda+ >= k+1,
/// where sigma_k sums (k - d(x)) over vertices of degree <= k.
SigmaKBound sigma_k_bound(const Graph& g, int k);

}  // namespace rd

#endif  // RD_CONNECTIVITY_HPP
