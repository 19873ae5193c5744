#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arrgraph/io.hpp"
#include "arrgraph/metrics.hpp"
#include "arrgraph/oracle.hpp"
#include "arrgraph/realizer.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace arrgraph;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

LineArrangement arrangement_from_py(const py::object& lines) {
    json j;
    j["lines"] = json::array();
    for (const auto& row : lines) {
        json triple = json::array();
        for (const auto& v : row.cast<py::sequence>()) {
            if (py::isinstance<py::str>(v)) triple.push_back(v.cast<std::string>());
            else triple.push_back(v.cast<long long>());
        }
        j["lines"].push_back(triple);
    }
    return arrangement_from_json(j);
}

} // namespace

PYBIND11_MODULE(arrgraph, mod) {
    mod.doc() = "simple pseudoline arrangement toolkit";

    mod.def("validate_wiring", [](int n, const std::vector<int>& swaps) {
        WiringValidation v = validate(WiringDiagram{n, swaps});
        json j;
        j["ok"] = v.ok;
        j["issues"] = json::array();
        for (const auto& i : v.issues)
            j["issues"].push_back({{"step", i.step}, {"what", i.what}});
        return json_to_py(j);
    }, py::arg("n"), py::arg("swaps"), "check the wiring diagram invariants");

    mod.def("enumerate_wiring", [](int n, bool allow_n6) {
        std::vector<std::vector<int>> out;
        enumerate_all(n, [&](const WiringDiagram& d) {
            out.push_back(d.swaps);
            return true;
        }, EnumerateOptions{allow_n6});
        return out;
    }, py::arg("n"), py::arg("allow_n6") = false,
       "all valid swap sequences on n wires, lexicographic");

    mod.def("check_sequence", [](const std::vector<int>& entries) {
        CheckResult res = check_sequence(DegreeSequence(entries));
        json j;
        j["accepted"] = res.accepted();
        if (res.accepted()) {
            const auto& p = *res.plan;
            j["plan"] = {{"n", p.n},           {"d2", p.d2},
                         {"d3", p.d3},         {"d4", p.d4},
                         {"branch", p.even_branch ? "star+pull" : "star"},
                         {"star_m", p.star_m}, {"line_ops", p.line_ops}};
        } else {
            j["reason"] = to_string(*res.reason);
            j["detail"] = res.detail;
        }
        return json_to_py(j);
    }, py::arg("entries"), "decide realizability of a degree sequence");

    mod.def("realize", [](const std::vector<int>& entries) {
        CheckResult res = check_sequence(DegreeSequence(entries));
        if (!res.accepted())
            throw py::value_error("sequence rejected: " + to_string(*res.reason) + " (" +
                                  res.detail + ")");
        return json_to_py(arrangement_to_json(realize(*res.plan)));
    }, py::arg("entries"), "construct an arrangement realizing the degree sequence");

    mod.def("analyze_wiring", [](int n, const std::vector<int>& swaps, bool distances) {
        ArrangementGraph g = build_from_wiring(WiringDiagram{n, swaps});
        return json_to_py(report_to_json(g, analyze(g), distances));
    }, py::arg("n"), py::arg("swaps"), py::arg("distances") = false);

    mod.def("analyze_arrangement", [](const py::object& lines, bool distances) {
        ArrangementGraph g = build_from_arrangement(arrangement_from_py(lines));
        return json_to_py(report_to_json(g, analyze(g), distances));
    }, py::arg("lines"), py::arg("distances") = false,
       "lines = [[a, b, c], ...] with int or decimal-string coefficients");

    mod.def("restricted_sweep", [](int n, const std::vector<int>& swaps) {
        return restricted_sweep(build_from_wiring(WiringDiagram{n, swaps})).swaps;
    }, py::arg("n"), py::arg("swaps"),
       "re-sweep so exactly one swap happens at level 1");

    mod.def("sweep_arrangement", [](const py::object& lines) {
        ArrangementSweep s = sweep_arrangement(arrangement_from_py(lines));
        return py::make_tuple(s.diagram.swaps, s.wire_to_line_id);
    }, py::arg("lines"), "sweep a simple arrangement into a wiring diagram");

    mod.def("verify", [](int n_max, const std::optional<std::vector<std::string>>& claims,
                         bool allow_n6) {
        VerifyOptions opts;
        opts.allow_n6 = allow_n6;
        if (claims) opts.claims = *claims;
        return json_to_py(run_to_json(verify_all(n_max, opts)));
    }, py::arg("n_max"), py::arg("claims") = py::none(), py::arg("allow_n6") = false);

    mod.def("census", [](int n, bool allow_n6) {
        return degree_sequence_census(n, allow_n6);
    }, py::arg("n"), py::arg("allow_n6") = false,
       "distinct crossing degree sequences over all diagrams on n wires");

    mod.def("claim_ids", [] {
        std::vector<std::string> out;
        for (const auto& c : claim_registry()) out.push_back(c.id);
        return out;
    });

    mod.def("svg_of_wiring", [](int n, const std::vector<int>& swaps, bool mark_outer,
                                bool mark_diametrical) {
        return to_svg(build_from_wiring(WiringDiagram{n, swaps}), mark_outer, mark_diametrical);
    }, py::arg("n"), py::arg("swaps"), py::arg("mark_outer") = false,
       py::arg("mark_diametrical") = false);
}
