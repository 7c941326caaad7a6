#include "rd/graph6.hpp"

#include <algorithm>
#include <sstream>

#include "rd/edge_coloring.hpp"

namespace rd {

namespace {
constexpr const char* kPalette[16] = {
    "red",       "blue",      "green",  "orange",  "purple", "brown",
    "cadetblue", "magenta",   "gold",   "darkred", "navy",   "darkgreen",
    "teal",      "firebrick", "indigo", "olive"};
}

Graph graph6_parse(const std::string& code) {
    if (code.empty()) throw Graph6Error("empty graph6 code", 0);
    size_t pos = 0;
    unsigned char first = static_cast<unsigned char>(code[0]);
    if (first < 63 || first > 126) throw Graph6Error("invalid graph6 byte", 0);
    if (first == 126) throw Graph6Error("long-form graph6 (n > 62) not supported", 0);
    int n = first - 63;
    ++pos;
    int bits_needed = n * (n - 1) / 2;
    size_t bytes_needed = static_cast<size_t>((bits_needed + 5) / 6);
    if (code.size() - pos != bytes_needed)
        throw Graph6Error("graph6 length mismatch: expected " + std::to_string(bytes_needed) + " data bytes", code.size());
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            size_t byte_idx = pos + static_cast<size_t>(bit / 6);
            unsigned char b = static_cast<unsigned char>(code[byte_idx]);
            if (b < 63 || b > 126) throw Graph6Error("invalid graph6 byte", byte_idx);
            int val = b - 63;
            if ((val >> (5 - bit % 6)) & 1) edges.push_back({i, j});
            ++bit;
        }
    }
    // Padding bits must be zero.
    if (bits_needed % 6 != 0) {
        unsigned char last = static_cast<unsigned char>(code.back()) - 63;
        int pad = 6 - bits_needed % 6;
        if (last & ((1 << pad) - 1)) throw Graph6Error("nonzero padding bits", code.size() - 1);
    }
    return Graph(n, std::move(edges));
}

std::string graph6_emit(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("graph6 cannot encode multigraphs");
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("graph6 short form limited to n <= 62");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int bits_needed = n * (n - 1) / 2;
    std::vector<int> bits(static_cast<size_t>(bits_needed), 0);
    auto bit_index = [](int i, int j) { return j * (j - 1) / 2 + i; };
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        auto [i, j] = std::minmax(u, v);
        bits[static_cast<size_t>(bit_index(i, j))] = 1;
    }
    for (int b = 0; b < bits_needed; b += 6) {
        int val = 0;
        for (int k = 0; k < 6; ++k) {
            val <<= 1;
            if (b + k < bits_needed) val |= bits[static_cast<size_t>(b + k)];
        }
        out.push_back(static_cast<char>(63 + val));
    }
    return out;
}

std::vector<Graph> graph6_parse_stream(const std::string& text) {
    std::vector<Graph> out;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) out.push_back(graph6_parse(tok));
    return out;
}

std::string dot_emit(const Graph& g, const EdgeColoring* coloring) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        os << "  " << u << " -- " << v;
        if (coloring != nullptr) {
            int c = coloring->colors[static_cast<size_t>(e)];
            os << " [color=" << kPalette[(c - 1) % 16] << ", label=" << c << "]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace rd
