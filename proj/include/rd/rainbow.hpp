#ifndef RD_RAINBOW_HPP
#define RD_RAINBOW_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rd/connectivity.hpp"
#include "rd/edge_coloring.hpp"
#include "rd/graph.hpp"

namespace rd {

/// Total vertex coloring: colors[v] in 1..num_colors.
struct VertexColoring {
    int num_colors = 0;
    std::vector<int> colors;
};

/// Per-pair rainbow-cut witnesses proving an edge coloring is a rainbow
/// disconnection coloring.
struct RdCertificate {
    EdgeColoring coloring;
    std::vector<CutCertificate> cuts;  // one per unordered pair, u < v
};

/// A rainbow u-v-cut for the given coloring, if one exists. Complete by
/// bipartition enumeration: any rainbow cut contains a bipartition cut.
std::optional<CutCertificate> exists_rainbow_cut(const Graph& g, const EdgeColoring& c, int u, int v);

struct RdVerifyResult {
    std::optional<RdCertificate> certificate;
    std::optional<std::pair<int, int>> failing_pair;
    bool ok() const { return certificate.has_value(); }
};

RdVerifyResult verify_rd_coloring(const Graph& g, const EdgeColoring& c);

/// Exact rd(G) with block reduction; bracket-only when over budget.
struct RdResult {
    std::optional<int> value;
    std::optional<EdgeColoring> witness;
    std::pair<int, int> bracket;
};

RdResult rd_exact(const Graph& g, int max_edges = 20);

/// Search for a rainbow disconnection coloring with exactly k colors
/// available (no block reduction; used for witness-mode scans).
std::optional<EdgeColoring> rd_coloring_search(const Graph& g, int k);

/// Lemma-style constructive bound: color G-u properly, then give each
/// edge at u a color absent at its other endpoint. Every vertex except u
/// ends up proper. Uses Delta(G-u)+1 colors, or Delta(G-u) when the
/// Class-1 refinement applies.
EdgeColoring rd_upper_vertex_removal(const Graph& g, int u);

/// Shrink-decompose, Shannon-color the pieces, and glue along provenance
/// with global color bijections. At most floor(3*lambda+/2) colors.
EdgeColoring rd_upper_three_halves(const Graph& g);

/// Vertex removal at a maximum-degree vertex; at most
/// min(n + lambda+ - Delta - 1, Delta + 1) colors.
EdgeColoring rd_upper_min_bound(const Graph& g);

struct BoundEntry {
    std::string label;
    int value = 0;
    bool verified = false;                // a witness coloring passed verification
    std::optional<EdgeColoring> witness;
};

struct BoundReport {
    int lambda_plus = 0;
    ChromaticIndexResult chromatic_index;
    std::vector<BoundEntry> upper_bounds;
    std::optional<int> rd_value;
    std::pair<int, int> rd_bracket;
};

BoundReport bound_report(const Graph& g, int max_rd_edges = 20, int max_chi_edges = 25);

// --- rainbow vertex-disconnection (for line graphs) ---

/// An x-y-rainbow-vertex-cut: S separates x,y in G-S (nonadjacent) or in
/// (G-xy)-S (adjacent, where S+x or S+y must be rainbow).
std::optional<std::vector<int>> exists_rainbow_vertex_cut(const Graph& g, const VertexColoring& c, int x, int y);

bool verify_rvd_coloring(const Graph& g, const VertexColoring& c);

struct RvdResult {
    std::optional<int> value;
    std::optional<VertexColoring> witness;
};

RvdResult rvd_exact(const Graph& g, int max_vertices = 10);

struct LineCheckReport {
    RdResult rd;
    RvdResult rvd_line;
    std::optional<bool> inequality_holds;           // rd(G) <= rvd(L(G))
    bool theorem_min_degree_premise = false;        // delta(G) >= 4 and equality
    std::optional<bool> equality_implies_chi_holds; // rd(G) == chi'(G) under the premise
};

LineCheckReport rd_vs_rvd_line_check(const Graph& g, int max_edges = 20, int max_rvd_vertices = 10);

}  // namespace rd

#endif  // RD_RAINBOW_HPP
