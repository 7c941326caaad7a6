#ifndef RD_JSON_IO_HPP
#define RD_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "rd/connectivity.hpp"
#include "rd/edge_coloring.hpp"
#include "rd/rainbow.hpp"
#include "rd/theorems.hpp"

namespace rd {

// EdgeColoring wire shape: {"k": int, "edges": [[u, v, color], ...]} with
// the edge order matching edge-id order.
nlohmann::json coloring_to_json(const Graph& g, const EdgeColoring& c);
EdgeColoring coloring_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json cut_to_json(const CutCertificate& c);
nlohmann::json rd_certificate_to_json(const Graph& g, const RdCertificate& cert);
RdCertificate rd_certificate_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json shrink_piece_to_json(const ShrinkPiece& p);
nlohmann::json bound_report_to_json(const BoundReport& r);
nlohmann::json scan_record_to_json(const ScanRecord& r);
nlohmann::json scan_summary_to_json(const ScanReport& r);
nlohmann::json ng_record_to_json(const NordhausGaddumRecord& r);
nlohmann::json line_check_to_json(const LineCheckReport& r);

}  // namespace rd

#endif  // RD_JSON_IO_HPP
