#include "arrgraph/io.hpp"
#include "arrgraph/metrics.hpp"
#include "arrgraph/oracle.hpp"
#include "arrgraph/realizer.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace arrgraph;

// exit codes: 0 success/accept, 1 domain rejection or verification failure,
// 2 unusable input
namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kBadInput = 2;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_sequence(const std::vector<std::string>& tokens) {
    std::vector<int> out;
    for (const auto& tok : tokens) {
        std::string t = tok;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream is(t);
        int v;
        while (is >> v) out.push_back(v);
        if (!is.eof()) throw input_error("not an integer sequence: " + tok);
    }
    if (out.empty()) throw input_error("empty degree sequence");
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw input_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << content;
}

// wiring text, wiring JSON, or arrangement JSON
ArrangementGraph load_graph(const std::string& raw) {
    std::string trimmed = raw;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
    if (!trimmed.empty() && trimmed.front() == '{') {
        json j;
        try {
            j = json::parse(trimmed);
        } catch (const json::exception& e) {
            throw input_error(std::string("JSON parse error: ") + e.what());
        }
        return graph_from_input_json(j);
    }
    auto nl = trimmed.find('\n');
    return build_from_wiring(wiring_from_text(nl == std::string::npos ? trimmed
                                                                      : trimmed.substr(0, nl)));
}

int cmd_check_seq(const std::vector<std::string>& tokens, const std::string& out_path) {
    DegreeSequence pi(parse_sequence(tokens));
    CheckResult res = check_sequence(pi);
    json j;
    j["sequence"] = pi.entries;
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
    write_output(out_path, dump_json(j));
    return res.accepted() ? kOk : kRejected;
}

int cmd_realize(const std::vector<std::string>& tokens, const std::string& out_path,
                const std::string& svg_path) {
    DegreeSequence pi(parse_sequence(tokens));
    CheckResult res = check_sequence(pi);
    if (!res.accepted()) {
        json j{{"accepted", false},
               {"reason", to_string(*res.reason)},
               {"detail", res.detail}};
        write_output("", dump_json(j));
        return kRejected;
    }
    LineArrangement A = realize(*res.plan);
    write_output(out_path, dump_json(arrangement_to_json(A)));
    if (!svg_path.empty())
        write_output(svg_path, to_svg(build_from_arrangement(A), false, false));
    return kOk;
}

int cmd_analyze(const std::string& in_path, const std::string& format,
                const std::string& out_path, bool mark_outer, bool mark_diametrical,
                bool distances) {
    ArrangementGraph g = load_graph(read_input(in_path));
    if (format == "dot") {
        write_output(out_path, to_dot(g, mark_outer, mark_diametrical));
    } else if (format == "svg") {
        write_output(out_path, to_svg(g, mark_outer, mark_diametrical));
    } else {
        AnalysisReport r = analyze(g);
        write_output(out_path, dump_json(report_to_json(g, r, distances)));
    }
    return kOk;
}

int cmd_enumerate(int n, const std::string& out_dir, bool allow_n6) {
    if (n < 3 || n > 6) throw input_error("enumerate supports 3 <= n <= 6");
    if (n == 6 && !allow_n6) throw input_error("n=6 enumeration needs --allow-n6");
    EnumerateOptions opts{allow_n6};
    if (out_dir.empty()) {
        enumerate_all(n, [&](const WiringDiagram& d) {
            std::cout << wiring_to_text(d) << "\n";
            return true;
        }, opts);
        return kOk;
    }
    fs::create_directories(out_dir);
    long count = 0;
    enumerate_all(n, [&](const WiringDiagram& d) {
        std::ostringstream name;
        name << "wiring_n" << n << "_" << std::setw(6) << std::setfill('0') << count << ".json";
        std::ofstream out(fs::path(out_dir) / name.str());
        out << dump_json(wiring_to_json(d));
        ++count;
        return true;
    }, opts);
    std::cout << "wrote " << count << " diagrams to " << out_dir << "\n";
    return kOk;
}

int cmd_verify(int n_max, const std::vector<std::string>& claims, const std::string& out_path,
               bool allow_n6) {
    if (n_max < 3 || n_max > 6) throw input_error("verify supports 3 <= n_max <= 6");
    if (n_max == 6 && !allow_n6) throw input_error("n_max=6 verification needs --allow-n6");
    for (const auto& c : claims) {
        bool known = false;
        for (const auto& info : claim_registry()) known = known || info.id == c;
        if (!known) throw input_error("unknown claim id: " + c);
    }
    VerifyOptions opts;
    opts.allow_n6 = allow_n6;
    opts.claims = claims;
    VerificationRun run = verify_all(n_max, opts);
    write_output(out_path, dump_json(run_to_json(run)));
    return run.ok() ? kOk : kRejected;
}

int cmd_render(const std::string& in_path, const std::string& format,
               const std::string& out_path, bool mark_outer, bool mark_diametrical) {
    ArrangementGraph g = load_graph(read_input(in_path));
    if (format == "dot")
        write_output(out_path, to_dot(g, mark_outer, mark_diametrical));
    else
        write_output(out_path, to_svg(g, mark_outer, mark_diametrical));
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simple pseudoline arrangement toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> seq_tokens;
    std::string out_path, svg_path, in_path, format = "json";
    std::vector<std::string> claims;
    bool mark_outer = false, mark_diametrical = false, distances = false, allow_n6 = false;
    int n = 0, n_max = 5;

    auto* check = app.add_subcommand("check-seq", "decide realizability of a degree sequence");
    check->add_option("sequence", seq_tokens, "degree sequence, e.g. 4 3 3 2 2 2")->required();
    check->add_option("--out", out_path, "output file (default stdout)");

    auto* real = app.add_subcommand("realize", "construct an arrangement with given degrees");
    real->add_option("sequence", seq_tokens, "degree sequence")->required();
    real->add_option("--out", out_path, "arrangement JSON output");
    real->add_option("--svg", svg_path, "also render the arrangement to this SVG file");

    auto* ana = app.add_subcommand("analyze", "report structure of a diagram or arrangement");
    ana->add_option("input", in_path, "wiring text/JSON or arrangement JSON; - for stdin")
        ->required();
    ana->add_option("--format", format, "json|dot|svg")
        ->check(CLI::IsMember({"json", "dot", "svg"}));
    ana->add_option("--out", out_path, "output file (default stdout)");
    ana->add_flag("--mark-outer", mark_outer, "mark outer-face vertices in dot/svg");
    ana->add_flag("--mark-diametrical", mark_diametrical, "mark diametrical vertices");
    ana->add_flag("--distances", distances, "include the full distance table");

    auto* enu = app.add_subcommand("enumerate", "list all wiring diagrams on n wires");
    enu->add_option("n", n, "number of wires (3..6)")->required();
    enu->add_option("--out", out_path, "write one JSON file per diagram into this directory");
    enu->add_flag("--allow-n6", allow_n6, "opt into the 292864-diagram n=6 walk");

    auto* ver = app.add_subcommand("verify", "check structural claims over all diagrams");
    ver->add_option("--n-max", n_max, "largest n to enumerate (3..6)");
    ver->add_option("--claims,--claim", claims, "claim ids to run (default all)")
        ->delimiter(',');
    ver->add_option("--out", out_path, "write the run report here");
    ver->add_flag("--allow-n6", allow_n6, "opt into n=6 (cheap claims only)");

    auto* ren = app.add_subcommand("render", "draw a diagram or arrangement");
    ren->add_option("input", in_path, "wiring text/JSON or arrangement JSON; - for stdin")
        ->required();
    ren->add_option("--format", format, "svg|dot")->check(CLI::IsMember({"svg", "dot"}));
    ren->add_option("--out", out_path, "output file (default stdout)");
    ren->add_flag("--mark-outer", mark_outer, "mark outer-face vertices");
    ren->add_flag("--mark-diametrical", mark_diametrical, "mark diametrical vertices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (check->parsed()) return cmd_check_seq(seq_tokens, out_path);
        if (real->parsed()) return cmd_realize(seq_tokens, out_path, svg_path);
        if (ana->parsed())
            return cmd_analyze(in_path, format, out_path, mark_outer, mark_diametrical,
                               distances);
        if (enu->parsed()) return cmd_enumerate(n, out_path, allow_n6);
        if (ver->parsed()) return cmd_verify(n_max, claims, out_path, allow_n6);
        if (ren->parsed())
            return cmd_render(in_path, format == "json" ? "svg" : format, out_path, mark_outer,
                              mark_diametrical);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kRejected;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
