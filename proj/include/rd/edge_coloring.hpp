#ifndef RD_EDGE_COLORING_HPP
#define RD_EDGE_COLORING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rd/graph.hpp"

namespace rd {

/// Total edge coloring: colors[edge_id] in 1..num_colors.
struct EdgeColoring {
    int num_colors = 0;
    std::vector<int> colors;
};

/// No two edges sharing an endpoint carry the same color.
bool is_proper(const Graph& g, const EdgeColoring& c);

/// Colors actually used (num_colors may overstate after construction).
int colors_used(const EdgeColoring& c);

/// Misra-Gries fan/alternating-path coloring of a simple graph with at
/// most Delta+1 colors.
EdgeColoring vizing_proper_coloring(const Graph& g);

/// Proper coloring of a loopless multigraph with at most floor(3*Delta/2)
/// colors (Shannon's bound guarantees the search succeeds).
EdgeColoring shannon_proper_coloring(const Graph& g);

/// Tri-state exact chromatic index. When the edge budget is exceeded the
/// result is a bracket [Delta, floor(3*Delta/2)] with no witness.
struct ChromaticIndexResult {
    std::optional<int> value;              // empty = unknown
    std::optional<EdgeColoring> witness;   // present iff value is
    std::pair<int, int> bracket;           // always valid: value in bracket
};

ChromaticIndexResult chromatic_index_exact(const Graph& g, int max_edges = 25);

/// Sufficient Class-1 test: every component of the max-degree subgraph is
/// unicyclic or a tree, and the subgraph is not a disjoint union of cycles.
bool class_one_sufficient(const Graph& g);

/// |E(G)| > floor(n/2) * Delta(G).
bool is_overfull(const Graph& g);

}  // namespace rd

#endif  // RD_EDGE_COLORING_HPP
