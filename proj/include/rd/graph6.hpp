#ifndef RD_GRAPH6_HPP
#define RD_GRAPH6_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rd/graph.hpp"

namespace rd {

struct EdgeColoring;  // edge_coloring.hpp

/// Thrown on malformed graph6 input; `offset` is the byte position.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"), offset(offset) {}
    size_t offset;
};

/// Parse one short-form graph6 code (simple graphs, n <= 62).
Graph graph6_parse(const std::string& code);

/// Emit the short-form graph6 code. Rejects multigraphs and n > 62.
std::string graph6_emit(const Graph& g);

/// Parse a whitespace/newline separated stream of graph6 codes.
std::vector<Graph> graph6_parse_stream(const std::string& text);

/// DOT output; when a coloring is supplied, edges get `color` attributes
/// from a fixed 16-entry palette cycling by color index.
std::string dot_emit(const Graph& g, const EdgeColoring* coloring = nullptr);

}  // namespace rd

#endif  // RD_GRAPH6_HPP
