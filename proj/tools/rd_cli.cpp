// Command line interface for rainbow disconnection computations.
//
// Commands: bounds, rd, chi, lambda-plus, verify, construct, scan, ng,
// line, family. Graph input is graph6 (file or '-' for stdin) or a
// generated family via --family. Exit codes: 0 success, 1 violation or
// verification failure, 2 usage error, 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rd/connectivity.hpp"
#include "rd/edge_coloring.hpp"
#include "rd/graph.hpp"
#include "rd/graph6.hpp"
#include "rd/json_io.hpp"
#include "rd/rainbow.hpp"
#include "rd/theorems.hpp"

namespace {

struct GraphSource {
    std::string path;    // graph6 file, or "-" for stdin
    std::string family;  // family spec, e.g. "petersen", "wheel:6"
};

void add_graph_source(CLI::App* cmd, GraphSource& src) {
    auto* file = cmd->add_option("input", src.path, "graph6 file, or - for stdin");
    auto* fam = cmd->add_option("--family", src.family, "generated family spec, e.g. petersen, wheel:6, grid:2,3");
    file->excludes(fam);
}

std::vector<rd::Graph> load_graphs(const GraphSource& src) {
    if (!src.family.empty()) return {rd::make_family(src.family)};
    if (src.path.empty()) throw CLI::ValidationError("input", "provide a graph6 input or --family");
    std::stringstream buf;
    if (src.path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(src.path);
        if (!in.good()) throw CLI::ValidationError("input", "cannot open " + src.path);
        buf << in.rdbuf();
    }
    return rd::graph6_parse_stream(buf.str());
}

std::vector<std::string> load_codes(const GraphSource& src) {
    std::vector<std::string> codes;
    for (const rd::Graph& g : load_graphs(src)) codes.push_back(rd::graph6_emit(g));
    return codes;
}

std::string bracket_text(std::pair<int, int> b) {
    return "[" + std::to_string(b.first) + "," + std::to_string(b.second) + "]";
}

void emit(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow disconnection number toolkit"};
    app.require_subcommand(1);

    int max_edges = 20;
    int max_chi_edges = 25;
    int max_rvd_vertices = 10;
    int workers = 1;
    std::string format = "text";
    app.add_option("--max-edges", max_edges, "edge budget for exact rd search")->check(CLI::PositiveNumber);
    app.add_option("--max-chi-edges", max_chi_edges, "edge budget for exact chromatic index")->check(CLI::PositiveNumber);
    app.add_option("--max-rvd-vertices", max_rvd_vertices, "vertex budget for exact rvd search")->check(CLI::PositiveNumber);
    app.add_option("--workers", workers, "parallel workers (scan only)")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));

    GraphSource bounds_src, rd_src, chi_src, lp_src, verify_src, construct_src, scan_src, ng_src, line_src;

    auto* cmd_bounds = app.add_subcommand("bounds", "full bound report per graph (JSON)");
    add_graph_source(cmd_bounds, bounds_src);

    auto* cmd_rd = app.add_subcommand("rd", "exact rainbow disconnection number per graph");
    add_graph_source(cmd_rd, rd_src);

    auto* cmd_chi = app.add_subcommand("chi", "exact chromatic index per graph");
    add_graph_source(cmd_chi, chi_src);

    auto* cmd_lp = app.add_subcommand("lambda-plus", "upper edge connectivity per graph");
    add_graph_source(cmd_lp, lp_src);

    auto* cmd_verify = app.add_subcommand("verify", "check a coloring or certificate file against a graph");
    add_graph_source(cmd_verify, verify_src);
    std::string coloring_path;
    cmd_verify->add_option("--coloring", coloring_path, "JSON coloring or certificate file")->required();

    auto* cmd_construct = app.add_subcommand("construct", "emit a verified rainbow disconnection coloring");
    add_graph_source(cmd_construct, construct_src);
    std::string method = "three-halves";
    int removal_vertex = -1;
    cmd_construct->add_option("--method", method, "construction")
        ->check(CLI::IsMember({"vertex-removal", "three-halves", "min-bound"}));
    cmd_construct->add_option("--vertex", removal_vertex, "removal vertex for --method vertex-removal (default: a maximum-degree vertex)");

    auto* cmd_scan = app.add_subcommand("scan", "conjecture scan over a graph6 corpus (JSON lines + summary)");
    add_graph_source(cmd_scan, scan_src);
    bool witness_only = false;
    cmd_scan->add_flag("--witness-only", witness_only, "only seek a (lambda+ + 1)-color witness");

    auto* cmd_ng = app.add_subcommand("ng", "Nordhaus-Gaddum check per graph");
    add_graph_source(cmd_ng, ng_src);

    auto* cmd_line = app.add_subcommand("line", "line graph and rd vs rvd report per graph");
    add_graph_source(cmd_line, line_src);

    auto* cmd_family = app.add_subcommand("family", "emit a generated family as graph6");
    std::string family_spec;
    cmd_family->add_option("spec", family_spec, "family spec, e.g. petersen, wheel:6")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_family) {
            std::cout << rd::graph6_emit(rd::make_family(family_spec)) << "\n";
            return 0;
        }

        if (*cmd_bounds) {
            for (const rd::Graph& g : load_graphs(bounds_src))
                emit(rd::bound_report_to_json(rd::bound_report(g, max_edges, max_chi_edges)));
            return 0;
        }

        if (*cmd_rd) {
            bool exhausted = false;
            for (const rd::Graph& g : load_graphs(rd_src)) {
                auto r = rd::rd_exact(g, max_edges);
                if (format == "json") {
                    nlohmann::json j{{"graph6", rd::graph6_emit(g)}};
                    if (r.value) j["rd"] = *r.value;
                    j["bracket"] = {r.bracket.first, r.bracket.second};
                    emit(j);
                } else if (r.value) {
                    std::cout << *r.value << "\n";
                } else {
                    std::cout << bracket_text(r.bracket) << "\n";
                }
                if (!r.value) exhausted = true;
            }
            return exhausted ? 3 : 0;
        }

        if (*cmd_chi) {
            bool exhausted = false;
            for (const rd::Graph& g : load_graphs(chi_src)) {
                auto r = rd::chromatic_index_exact(g, max_chi_edges);
                if (format == "json") {
                    nlohmann::json j{{"graph6", rd::graph6_emit(g)}};
                    if (r.value) j["chromatic_index"] = *r.value;
                    j["bracket"] = {r.bracket.first, r.bracket.second};
                    emit(j);
                } else if (r.value) {
                    std::cout << *r.value << "\n";
                } else {
                    std::cout << bracket_text(r.bracket) << "\n";
                }
                if (!r.value) exhausted = true;
            }
            return exhausted ? 3 : 0;
        }

        if (*cmd_lp) {
            for (const rd::Graph& g : load_graphs(lp_src)) {
                auto r = rd::upper_edge_connectivity(g);
                if (format == "json") {
                    emit(nlohmann::json{{"lambda_plus", r.value},
                                        {"pair", {r.attaining_pair.first, r.attaining_pair.second}}});
                } else {
                    std::cout << r.value << "\n";
                }
            }
            return 0;
        }

        if (*cmd_verify) {
            auto graphs = load_graphs(verify_src);
            if (graphs.size() != 1) throw CLI::ValidationError("input", "verify expects exactly one graph");
            const rd::Graph& g = graphs[0];
            std::ifstream in(coloring_path);
            if (!in.good()) throw CLI::ValidationError("--coloring", "cannot open " + coloring_path);
            nlohmann::json j = nlohmann::json::parse(in);
            if (j.contains("cuts")) {
                rd::RdCertificate cert = rd::rd_certificate_from_json(g, j);
                auto res = rd::verify_rd_coloring(g, cert.coloring);
                if (!res.ok()) {
                    auto p = *res.failing_pair;
                    std::cout << "FAIL pair " << p.first << " " << p.second << "\n";
                    return 1;
                }
            } else {
                rd::EdgeColoring c = rd::coloring_from_json(g, j);
                auto res = rd::verify_rd_coloring(g, c);
                if (!res.ok()) {
                    auto p = *res.failing_pair;
                    std::cout << "FAIL pair " << p.first << " " << p.second << "\n";
                    return 1;
                }
            }
            std::cout << "OK\n";
            return 0;
        }

        if (*cmd_construct) {
            for (const rd::Graph& g : load_graphs(construct_src)) {
                rd::EdgeColoring c;
                if (method == "vertex-removal") {
                    if (removal_vertex >= 0) {
                        c = rd::rd_upper_vertex_removal(g, removal_vertex);
                    } else {
                        c = rd::rd_upper_min_bound(g);  // removal at a maximum-degree vertex
                    }
                } else if (method == "min-bound") {
                    c = rd::rd_upper_min_bound(g);
                } else {
                    c = rd::rd_upper_three_halves(g);
                }
                if (!rd::verify_rd_coloring(g, c).ok()) {
                    std::cerr << "construction failed verification\n";
                    return 1;
                }
                if (format == "dot") {
                    std::cout << rd::dot_emit(g, &c);
                } else {
                    emit(rd::coloring_to_json(g, c));
                }
            }
            return 0;
        }

        if (*cmd_scan) {
            rd::ScanOptions opts;
            opts.witness_only = witness_only;
            opts.max_edges = max_edges;
            opts.workers = workers;
            auto rep = rd::conjecture_scan(load_codes(scan_src), opts);
            for (const auto& r : rep.records) emit(rd::scan_record_to_json(r));
            emit(rd::scan_summary_to_json(rep));
            if (rep.violation_count > 0) return 1;
            return rep.unresolved_count > 0 ? 3 : 0;
        }

        if (*cmd_ng) {
            bool violation = false;
            for (const rd::Graph& g : load_graphs(ng_src)) {
                auto rec = rd::nordhaus_gaddum_check(g, max_edges);
                emit(rd::ng_record_to_json(rec));
                if (!rec.lower_holds || !rec.upper_holds || rec.sum_extremal != rec.characterized)
                    violation = true;
            }
            return violation ? 1 : 0;
        }

        if (*cmd_line) {
            bool violation = false, exhausted = false;
            for (const rd::Graph& g : load_graphs(line_src)) {
                auto rep = rd::rd_vs_rvd_line_check(g, max_edges, max_rvd_vertices);
                nlohmann::json j = rd::line_check_to_json(rep);
                j["line_graph6"] = rd::graph6_emit(rd::line_graph(g));
                emit(j);
                if (rep.inequality_holds.has_value() && !*rep.inequality_holds) violation = true;
                if (!rep.inequality_holds.has_value()) exhausted = true;
            }
            if (violation) return 1;
            return exhausted ? 3 : 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const rd::Graph6Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
