#ifndef RD_THEOREMS_HPP
#define RD_THEOREMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rd/graph.hpp"
#include "rd/rainbow.hpp"

namespace rd {

/// rd(G) = 1 iff G is a tree.
bool characterize_rd_1(const Graph& g);

/// rd(G) = 2 iff every block is K2 or a cycle and at least one is a cycle.
bool characterize_rd_2(const Graph& g);

/// rd(G) = n-1 iff G has at least two vertices of degree n-1.
bool characterize_rd_n_minus_1(const Graph& g);

/// rd(G) = n-2 iff one of three degree/adjacency conditions holds;
/// `condition` reports which (1..3, or 0 when none).
struct RdNMinus2Result {
    bool holds = false;
    int condition = 0;
};
RdNMinus2Result characterize_rd_n_minus_2(const Graph& g);

struct NordhausGaddumRecord {
    int n = 0;
    int rd_g = 0;
    int rd_complement = 0;
    bool lower_holds = false;    // rd + rd-bar >= n-2
    bool upper_holds = false;    // rd + rd-bar <= 2n-5
    bool sum_extremal = false;   // rd + rd-bar == 2n-5
    bool characterized = false;  // the extremal characterization holds for G or its complement
};

/// Requires both G and its complement connected.
NordhausGaddumRecord nordhaus_gaddum_check(const Graph& g, int max_edges = 20);

struct ScanRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    int delta = 0;
    int lambda_plus = 0;
    std::optional<int> rd;               // exact value when computed
    bool within_plus_one = false;        // rd <= lambda+ + 1 established
    bool unresolved = false;
    std::vector<std::string> violations; // claim labels that failed
};

struct ScanReport {
    std::vector<ScanRecord> records;
    int violation_count = 0;
    int unresolved_count = 0;
};

struct ScanOptions {
    bool witness_only = false;  // only seek a (lambda+ + 1)-color witness
    int max_edges = 20;
    int workers = 1;
};

/// Conjecture scanner over a graph6 corpus: checks lambda+ <= rd <=
/// lambda+ + 1 plus the small-degree / large-degree / small-order /
/// overfull implications on each record.
ScanReport conjecture_scan(const std::vector<std::string>& graph6_codes, const ScanOptions& opts = {});

struct OddRegularRecord {
    bool preconditions_met = false;  // k-regular, k odd, k-edge-connected
    int k = 0;
    std::optional<int> chromatic_index;
    std::optional<int> rd;
    bool equivalence_holds = false;  // chi' == k  <=>  rd == k
    bool regular_bracket_holds = false;  // k <= rd <= k+1
};

OddRegularRecord odd_regular_equivalence(const Graph& g, int max_edges = 20);

}  // namespace rd

#endif  // RD_THEOREMS_HPP
