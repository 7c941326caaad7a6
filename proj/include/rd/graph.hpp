#ifndef RD_GRAPH_HPP
#define RD_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rd {

/// A loopless multigraph on vertices 0..n-1 with dense edge ids 0..m-1.
/// Parallel edges are permitted and distinguished by edge id. Immutable
/// after construction; all queries are const and thread-safe.
class Graph {
public:
    struct Edge {
        int u;
        int v;
    };

    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    Edge edge(int id) const { return edges_[static_cast<size_t>(id)]; }

    /// Edge ids incident with v, ascending.
    const std::vector<int>& incident_edges(int v) const { return incident_[static_cast<size_t>(v)]; }

    int degree(int v) const { return static_cast<int>(incident_[static_cast<size_t>(v)].size()); }

    /// True when no pair of vertices is joined by more than one edge.
    bool is_simple() const { return simple_; }

    bool adjacent(int u, int v) const;

    /// Given one endpoint of an edge, returns the other.
    int other_end(int edge_id, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    bool simple_ = true;
};

struct DegreeProfile {
    std::vector<int> degrees;
    int max_degree = 0;
    int min_degree = 0;
};

DegreeProfile degree_profile(const Graph& g);

bool is_connected(const Graph& g);

/// Component index per vertex, components numbered 0.. in order of
/// smallest contained vertex.
std::vector<int> connected_components(const Graph& g);

/// A subgraph together with the maps back into its parent.
struct Subgraph {
    Graph graph;
    std::vector<int> vertex_map;  // subgraph vertex -> parent vertex
    std::vector<int> edge_map;    // subgraph edge id -> parent edge id
};

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Induced subgraph on the vertices of maximum degree.
Subgraph max_degree_subgraph(const Graph& g);

/// Blocks (maximal 2-connected subgraphs and bridges) of a connected
/// graph. Every edge lies in exactly one block.
std::vector<Subgraph> blocks(const Graph& g);

/// Line graph of a simple graph: vertex i of the result corresponds to
/// edge i of g, adjacency iff the edges share an endpoint.
Graph line_graph(const Graph& g);

Graph complement(const Graph& g);

// Deterministic labeled generators.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int n);                 // K_{1,n-1}, center 0
Graph make_wheel(int n);                // C_{n-1} joined to hub n-1, n >= 4
Graph make_grid(int m, int n);          // vertex (r,c) = r*n+c
Graph make_complete_multipartite(const std::vector<int>& parts);
Graph make_petersen();

/// Parse a family spec such as "petersen", "wheel:6", "grid:2,3",
/// "complete_multipartite:2,3". Throws std::invalid_argument on bad specs.
Graph make_family(const std::string& spec);

}  // namespace rd

#endif  // RD_GRAPH_HPP
