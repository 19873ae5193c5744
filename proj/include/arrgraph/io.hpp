#pragma once

#include "arrgraph/graph.hpp"
#include "arrgraph/metrics.hpp"
#include "arrgraph/oracle.hpp"

#include <json.hpp>
#include <iosfwd>
#include <string>

namespace arrgraph {

// File formats.  JSON emission is byte-deterministic: keys sorted (library
// default), big integers and rationals rendered as decimal strings.

nlohmann::json wiring_to_json(const WiringDiagram& d);
WiringDiagram wiring_from_json(const nlohmann::json& j);

// "n: s1 s2 ... sm"
std::string wiring_to_text(const WiringDiagram& d);
WiringDiagram wiring_from_text(const std::string& line);

nlohmann::json arrangement_to_json(const LineArrangement& A);
LineArrangement arrangement_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const ArrangementGraph& g);

struct AnalysisReport {
    std::vector<int> degree_sequence;
    EccentricityReport ecc;
    std::vector<int> outer;
    std::vector<int> one_layer;
    bool diametrical_equals_outer = false;
};

AnalysisReport analyze(const ArrangementGraph& g);
nlohmann::json report_to_json(const ArrangementGraph& g, const AnalysisReport& r,
                              bool include_distances = false);

nlohmann::json run_to_json(const VerificationRun& run);

std::string to_dot(const ArrangementGraph& g, bool mark_outer, bool mark_diametrical);
std::string to_svg(const ArrangementGraph& g, bool mark_outer, bool mark_diametrical);

// Reads a wiring diagram or arrangement from a JSON value (detected by key)
// and builds the graph either way.
ArrangementGraph graph_from_input_json(const nlohmann::json& j);

std::string dump_json(const nlohmann::json& j); // 2-space indent, trailing newline

} // namespace arrgraph
