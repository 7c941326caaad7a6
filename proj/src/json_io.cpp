#include "rd/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace rd {

using nlohmann::json;

json coloring_to_json(const Graph& g, const EdgeColoring& c) {
    json edges = json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        edges.push_back({u, v, c.colors[static_cast<size_t>(e)]});
    }
    return {{"k", c.num_colors}, {"edges", edges}};
}

EdgeColoring coloring_from_json(const Graph& g, const json& j) {
    EdgeColoring c;
    c.num_colors = j.at("k").get<int>();
    const auto& edges = j.at("edges");
    if (static_cast<int>(edges.size()) != g.edge_count())
        throw std::invalid_argument("coloring edge count does not match the graph");
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& entry = edges[static_cast<size_t>(e)];
        int u = entry.at(0).get<int>(), v = entry.at(1).get<int>(), col = entry.at(2).get<int>();
        auto ge = g.edge(e);
        if (std::minmax(u, v) != std::minmax(ge.u, ge.v))
            throw std::invalid_argument("coloring edge " + std::to_string(e) + " does not match the graph");
        if (col < 1 || col > c.num_colors) throw std::invalid_argument("color out of range");
        c.colors.push_back(col);
    }
    return c;
}

json cut_to_json(const CutCertificate& c) {
    return {{"pair", {c.u, c.v}}, {"side", c.side}, {"edges", c.crossing_edges}};
}

json rd_certificate_to_json(const Graph& g, const RdCertificate& cert) {
    json cuts = json::array();
    for (const auto& c : cert.cuts) cuts.push_back(cut_to_json(c));
    json j = coloring_to_json(g, cert.coloring);
    j["cuts"] = cuts;
    return j;
}

RdCertificate rd_certificate_from_json(const Graph& g, const json& j) {
    RdCertificate cert;
    cert.coloring = coloring_from_json(g, j);
    for (const auto& jc : j.at("cuts")) {
        CutCertificate c;
        c.u = jc.at("pair").at(0).get<int>();
        c.v = jc.at("pair").at(1).get<int>();
        c.side = jc.at("side").get<std::vector<int>>();
        c.crossing_edges = jc.at("edges").get<std::vector<int>>();
        cert.cuts.push_back(std::move(c));
    }
    return cert;
}

json shrink_piece_to_json(const ShrinkPiece& p) {
    json edges = json::array();
    for (int e = 0; e < p.graph.edge_count(); ++e) {
        auto [u, v] = p.graph.edge(e);
        edges.push_back({u, v, p.edge_map[static_cast<size_t>(e)]});
    }
    json provenance = json::array();
    for (const auto& step : p.provenance) {
        provenance.push_back({{"pivot", {step.u, step.v}}, {"cut_edges", step.cut_edges}, {"side", step.side}});
    }
    json j = {{"n", p.graph.vertex_count()},
              {"edges", edges},
              {"vertex_map", p.vertex_map},
              {"provenance", provenance}};
    if (p.special_vertex) j["special_vertex"] = *p.special_vertex;
    return j;
}

json bound_report_to_json(const BoundReport& r) {
    json uppers = json::array();
    for (const auto& b : r.upper_bounds) {
        uppers.push_back({{"label", b.label}, {"value", b.value}, {"verified", b.verified}});
    }
    json j = {{"lambda_plus", r.lambda_plus}, {"upper_bounds", uppers}};
    if (r.chromatic_index.value) {
        j["chromatic_index"] = *r.chromatic_index.value;
    } else {
        j["chromatic_index_bracket"] = {r.chromatic_index.bracket.first, r.chromatic_index.bracket.second};
    }
    if (r.rd_value) {
        j["rd"] = *r.rd_value;
    } else {
        j["rd_bracket"] = {r.rd_bracket.first, r.rd_bracket.second};
    }
    return j;
}

json scan_record_to_json(const ScanRecord& r) {
    json j = {{"graph6", r.graph6}, {"n", r.n},
              {"m", r.m},           {"delta", r.delta},
              {"lambda_plus", r.lambda_plus}, {"within_plus_one", r.within_plus_one},
              {"unresolved", r.unresolved},   {"violations", r.violations}};
    if (r.rd) j["rd"] = *r.rd;
    return j;
}

json scan_summary_to_json(const ScanReport& r) {
    return {{"graphs", r.records.size()},
            {"violations", r.violation_count},
            {"unresolved", r.unresolved_count}};
}

json ng_record_to_json(const NordhausGaddumRecord& r) {
    return {{"n", r.n},
            {"rd", r.rd_g},
            {"rd_complement", r.rd_complement},
            {"lower_holds", r.lower_holds},
            {"upper_holds", r.upper_holds},
            {"sum_extremal", r.sum_extremal},
            {"characterized", r.characterized}};
}

json line_check_to_json(const LineCheckReport& r) {
    json j;
    if (r.rd.value) j["rd"] = *r.rd.value;
    else j["rd_bracket"] = {r.rd.bracket.first, r.rd.bracket.second};
    if (r.rvd_line.value) j["rvd_line"] = *r.rvd_line.value;
    if (r.inequality_holds) j["inequality_holds"] = *r.inequality_holds;
    j["min_degree_premise"] = r.theorem_min_degree_premise;
    if (r.equality_implies_chi_holds) j["equality_implies_chi"] = *r.equality_implies_chi_holds;
    return j;
}

}  // namespace rd
