// tgr -- command-line front door for the periodic temporal realization
// toolkit.  Every invocation prints exactly one JSON document on stdout
// (machine interface) and short human-readable notes on stderr.  Exit
// codes: 0 feasible/valid/pass, 1 infeasible/invalid/fail, 2 input error,
// 3 unknown (budget exhausted).

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tgr/tgr.hpp"

namespace {

using tgr::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnknown = 3;

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tgr::InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tgr::InputError("cannot write '" + path + "'");
    out << doc.dump(2) << "\n";
}

json json_or_null(int value) {
    if (value == tgr::kInf) return nullptr;
    return value;
}

/// One readable name for the instance's shape.
std::string class_name(const tgr::TopologyClass& topo, int vertices) {
    if (!topo.connected) return "Disconnected";
    if (topo.tree) return topo.bidirected ? "BidirectedTree" : "Tree";
    if (topo.unicyclic) {
        if (static_cast<int>(topo.cycle.size()) == vertices)
            return topo.bidirected ? "BidirectedCycle" : "Cycle";
        return "Unicyclic";
    }
    if (topo.bipartite) return "Bipartite";
    return "General";
}

json slack_json(const tgr::SlackReport& report, const tgr::DiGraph& g) {
    json doc;
    doc["k_min"] = json_or_null(report.k_min);
    doc["per_pair"] = json::array();
    for (const tgr::PairSlack& ps : report.per_pair)
        doc["per_pair"].push_back({{"from", g.id(ps.from)},
                                   {"to", g.id(ps.to)},
                                   {"d", ps.bound},
                                   {"distance", ps.distance},
                                   {"slack", ps.slack}});
    return doc;
}

json certificate_json(const tgr::Certificate& cert, const tgr::DiGraph& g, bool all) {
    json doc;
    doc["status"] = tgr::to_string(cert.status);
    doc["route"] = cert.route;
    doc["nodes"] = cert.nodes;
    doc["exhausted"] = cert.exhausted;
    doc["truncated"] = cert.truncated;
    doc["reason"] = cert.reason;
    doc["witness"] = cert.witness ? tgr::labeling_json(g, *cert.witness) : json(nullptr);
    if (all) {
        doc["solutions"] = json::array();
        for (const tgr::Labeling& sol : cert.solutions)
            doc["solutions"].push_back(tgr::labeling_json(g, sol));
    }
    return doc;
}

int exit_for_status(tgr::Status status) {
    switch (status) {
        case tgr::Status::Feasible: return kExitPass;
        case tgr::Status::Infeasible: return kExitFail;
        default: return kExitUnknown;
    }
}

json gadget_sidecar(const tgr::Gadget& gd) {
    json side;
    side["family"] = gd.family;
    side["delta"] = gd.delta;
    side["k"] = gd.k;
    side["kappa"] = gd.kappa;
    side["designated"] = json::array({gd.designated.first, gd.designated.second});
    return side;
}

/// Rebuilds a Gadget from an emitted {"instance", "sidecar"} document.
tgr::Gadget load_gadget(const json& doc) {
    if (!doc.is_object() || !doc.contains("instance") || !doc.contains("sidecar"))
        throw tgr::ParseError("gadget document must hold 'instance' and 'sidecar'");
    tgr::Gadget gd;
    gd.instance = tgr::parse_instance(doc.at("instance"));
    const json& side = doc.at("sidecar");
    if (!side.is_object()) throw tgr::ParseError("'sidecar' must be an object");
    for (const std::string key : {"family", "delta", "k", "designated"})
        if (!side.contains(key))
            throw tgr::ParseError("gadget sidecar is missing '" + key + "'");
    gd.family = side.at("family").get<std::string>();
    gd.delta = side.at("delta").get<int>();
    gd.k = side.at("k").get<int>();
    gd.kappa = side.contains("kappa") ? side.at("kappa").get<int>() : gd.k;
    const json& des = side.at("designated");
    if (!des.is_array() || des.size() != 2)
        throw tgr::ParseError("'designated' must be a two-element array");
    gd.designated = {des[0].get<std::string>(), des[1].get<std::string>()};
    if (gd.delta != gd.instance.delta)
        throw tgr::ValidationError("sidecar delta does not match the instance");
    const tgr::DiGraph& g = gd.instance.graph;
    if (!g.has_vertex(gd.designated.first) || !g.has_vertex(gd.designated.second) ||
        g.edge_index(g.vertex(gd.designated.first), g.vertex(gd.designated.second)) < 0 ||
        g.edge_index(g.vertex(gd.designated.second), g.vertex(gd.designated.first)) < 0)
        throw tgr::ValidationError("designated pair is not a bidirected edge of the instance");
    return gd;
}

std::string csv_cell(int value) {
    return value == tgr::kInf ? "inf" : std::to_string(value);
}

void write_matrix_csv(const std::string& path, const tgr::DiGraph& g,
                      const std::vector<std::vector<int>>& matrix) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tgr::InputError("cannot write '" + path + "'");
    out << "from";
    for (int v = 0; v < g.n(); ++v) out << "," << g.id(v);
    out << "\n";
    for (int u = 0; u < g.n(); ++u) {
        out << g.id(u);
        for (int v = 0; v < g.n(); ++v) out << "," << csv_cell(matrix[u][v]);
        out << "\n";
    }
}

json matrix_json(const std::vector<std::vector<int>>& matrix) {
    json rows = json::array();
    for (const std::vector<int>& row : matrix) {
        json r = json::array();
        for (int v : row) r.push_back(json_or_null(v));
        rows.push_back(r);
    }
    return rows;
}

struct BudgetFlags {
    std::uint64_t max_nodes = 0;
    std::uint64_t timeout_ms = 0;
    bool no_symmetry = false;
    bool symmetry = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-nodes", max_nodes, "abort after this many search nodes");
        cmd->add_option("--timeout-ms", timeout_ms, "abort after this wall-clock budget");
        cmd->add_flag("--no-symmetry", no_symmetry, "disable the shift symmetry break");
        cmd->add_flag("--symmetry", symmetry, "force the shift symmetry break on");
    }

    tgr::SearchConfig config() const {
        tgr::SearchConfig cfg;
        cfg.max_nodes = max_nodes;
        cfg.timeout_ms = timeout_ms;
        if (no_symmetry) cfg.symmetry_break = false;
        if (symmetry) cfg.symmetry_break = true;
        return cfg;
    }
};

int cmd_validate(const std::string& path) {
    json doc;
    try {
        json raw = tgr::load_json_text(read_file(path));
        json report;
        if (tgr::is_undirected_document(raw)) {
            tgr::TtrInstance ttr = tgr::parse_ttr(raw);
            tgr::TopologyClass topo = tgr::classify(tgr::bidirect(ttr.skeleton));
            report["valid"] = true;
            report["undirected"] = true;
            report["delta"] = ttr.delta;
            report["vertices"] = ttr.skeleton.n();
            report["edges"] = ttr.skeleton.m();
            report["bounds"] = static_cast<int>(ttr.bounds.size());
            report["class"] = class_name(topo, ttr.skeleton.n());
            report["slack"] = slack_json(ttr_slack(ttr), ttr.skeleton);
        } else {
            tgr::Instance inst = tgr::parse_instance(raw);
            tgr::TopologyClass topo = tgr::classify(inst.graph);
            report["valid"] = true;
            report["undirected"] = false;
            report["delta"] = inst.delta;
            report["vertices"] = inst.graph.n();
            report["edges"] = inst.graph.m();
            report["bounds"] = static_cast<int>(inst.bounds.size());
            report["class"] = class_name(topo, inst.graph.n());
            report["slack"] = slack_json(tgr::slack(inst), inst.graph);
        }
        emit(report);
        std::cerr << "valid (" << report["class"].get<std::string>() << ")\n";
        return kExitPass;
    } catch (const tgr::ValidationError& err) {
        emit(json{{"valid", false}, {"reason", err.what()}});
        std::cerr << "invalid: " << err.what() << "\n";
        return kExitFail;
    }
    // ParseError and file errors fall through to the generic handler (exit 2).
}

int cmd_solve(const std::string& path, const BudgetFlags& budget, bool all) {
    tgr::Instance inst = tgr::parse_instance_text(read_file(path));
    tgr::Certificate cert = all ? tgr::enumerate_solutions(inst, budget.config())
                                : tgr::auto_solve(inst, budget.config());
    emit(certificate_json(cert, inst.graph, all));
    std::cerr << tgr::to_string(cert.status) << " via " << cert.route << " (" << cert.nodes
              << " nodes)\n";
    return exit_for_status(cert.status);
}

int cmd_check(const std::string& instance_path, const std::string& labeling_path) {
    tgr::Instance inst = tgr::parse_instance_text(read_file(instance_path));
    tgr::Labeling lab = tgr::parse_labeling_text(read_file(labeling_path), inst.graph);
    tgr::VerifyReport report = tgr::verify_labeling(inst, lab);
    json doc;
    doc["ok"] = report.ok;
    doc["violations"] = json::array();
    for (const tgr::Violation& v : report.violations) {
        json entry;
        entry["from"] = inst.graph.id(v.from);
        entry["to"] = inst.graph.id(v.to);
        entry["d"] = v.bound;
        entry["duration"] = v.duration;
        entry["witness"] = json::array();
        tgr::TemporalPath path = tgr::fastest_path(inst.graph, lab, v.from, v.to);
        for (const tgr::TemporalStep& step : path.steps)
            entry["witness"].push_back({{"from", inst.graph.id(step.from)},
                                        {"to", inst.graph.id(step.to)},
                                        {"depart", step.depart},
                                        {"arrive", step.arrive}});
        doc["violations"].push_back(entry);
    }
    emit(doc);
    std::cerr << (report.ok ? "labeling satisfies every bound"
                            : "labeling violates " +
                                  std::to_string(report.violations.size()) + " bound(s)")
              << "\n";
    return report.ok ? kExitPass : kExitFail;
}

tgr::Gadget build_gadget(std::string family, int delta, int k) {
    std::string key;
    for (char c : family)
        if (c != '-' && c != '_') key += static_cast<char>(std::tolower(c));
    if (key == "auto") return tgr::select_gadget(delta, k);
    if (key == "oddk0") return tgr::gadget_odd_k0(delta);
    if (key == "oddquarter") return tgr::gadget_odd_quarter(delta, k);
    if (key == "delta4") {
        if (delta != 4 || k != 0)
            throw tgr::DomainError("the delta4 family is defined for period 4 with slack 0");
        return tgr::gadget_delta4();
    }
    if (key == "oddcomb") return tgr::gadget_odd_comb(delta, k);
    if (key == "evencomb") return tgr::gadget_even_comb(delta, k);
    if (key == "evencombsubgadget") return tgr::even_comb_subgadget(delta);
    throw tgr::InputError("unknown gadget family '" + family + "'");
}

int cmd_gadget(const std::string& family, int delta, int k, const std::string& out) {
    tgr::Gadget gd = build_gadget(family, delta, k);
    json doc;
    doc["instance"] = tgr::instance_json(gd.instance);
    doc["sidecar"] = gadget_sidecar(gd);
    emit(doc);
    if (!out.empty()) write_file(out, doc);
    std::cerr << gd.family << " gadget: " << gd.instance.graph.n() << " vertices, "
              << gd.instance.graph.m() << " edges, " << gd.instance.bounds.size()
              << " bounds\n";
    return kExitPass;
}

int cmd_reduce_coloring(const std::string& path, int delta, const std::string& out) {
    tgr::DiGraph g = tgr::parse_undirected_graph_text(read_file(path));
    tgr::TtrInstance ttr = tgr::star_from_coloring(g, delta);
    json doc;
    doc["instance"] = tgr::ttr_json(ttr);
    doc["sidecar"] = json{{"kind", "coloring"}, {"hub", ttr.skeleton.id(0)}};
    emit(doc);
    if (!out.empty()) write_file(out, doc);
    std::cerr << "coloring lift: " << ttr.skeleton.n() << " vertices, "
              << ttr.bounds.size() << " bounds\n";
    return kExitPass;
}

int cmd_reduce_nae3sat(const std::string& path, bool symmetric, const std::string& out) {
    tgr::MonotoneCnf cnf = tgr::parse_cnf_text(read_file(path));
    tgr::NaeReduction red = tgr::nae3sat_to_ditgr(cnf, symmetric);
    json doc;
    doc["instance"] = tgr::instance_json(red.instance);
    json readout = json::object();
    for (const auto& [var, edge] : red.readout)
        readout[var] = json::array({edge.first, edge.second});
    doc["sidecar"] = json{{"kind", "nae3sat"}, {"symmetric", symmetric}, {"readout", readout}};
    emit(doc);
    if (!out.empty()) write_file(out, doc);
    std::cerr << "not-all-equal lift: " << red.instance.graph.n() << " vertices, "
              << red.instance.bounds.size() << " bounds\n";
    return kExitPass;
}

int cmd_reduce_ttr(const std::string& path, int k, const std::string& out) {
    tgr::TtrInstance ttr = tgr::parse_ttr_text(read_file(path));
    tgr::SpliceReduction red = tgr::reduce_ttr_to_dittr(ttr, k);
    json doc;
    doc["instance"] = tgr::instance_json(red.instance);
    json spliced = json::array();
    for (const auto& [a, b] : red.spliced) spliced.push_back(json::array({a, b}));
    doc["sidecar"] = json{{"kind", "ttr2dittr"},
                          {"family", red.family},
                          {"delta", red.delta},
                          {"k", red.k},
                          {"prefix", red.prefix},
                          {"spliced", spliced}};
    emit(doc);
    if (!out.empty()) write_file(out, doc);
    std::cerr << "splice lift (" << red.family << "): " << red.instance.graph.n()
              << " vertices, " << red.instance.bounds.size() << " bounds\n";
    return kExitPass;
}

int cmd_certify(const std::string& path, const BudgetFlags& budget) {
    tgr::Gadget gd = load_gadget(tgr::load_json_text(read_file(path)));
    json doc;
    tgr::Status status;
    if (gd.family == "even-comb-subgadget") {
        tgr::ClaimReport report = tgr::certify_even_subgadget_claim(gd, budget.config());
        doc["status"] = tgr::to_string(report.status);
        doc["holds"] = report.holds;
        doc["solutions"] = report.solution_count;
        doc["nodes"] = report.nodes;
        doc["reason"] = report.reason;
        doc["counterexample"] = report.counterexample
                                    ? tgr::labeling_json(gd.instance.graph, *report.counterexample)
                                    : json(nullptr);
        status = report.status;
        std::cerr << (report.holds ? "claim holds over " : "claim FAILS over ")
                  << report.solution_count << " solutions\n";
    } else {
        tgr::CertificationReport report = tgr::certify_gadget(gd, budget.config());
        doc["status"] = tgr::to_string(report.status);
        doc["certified"] = report.certified;
        doc["feasible"] = report.feasible;
        doc["designated_consistent"] = report.designated_consistent;
        doc["shifts_complete"] = report.shifts_complete;
        doc["solutions"] = report.solution_count;
        doc["nodes"] = report.nodes;
        doc["reason"] = report.reason;
        doc["counterexample"] = report.counterexample
                                    ? tgr::labeling_json(gd.instance.graph, *report.counterexample)
                                    : json(nullptr);
        status = report.status;
        std::cerr << (report.certified ? "certified over " : "NOT certified; ")
                  << report.solution_count << " solutions, " << report.nodes << " nodes\n";
    }
    emit(doc);
    return exit_for_status(status);
}

int cmd_distances(const std::string& instance_path, const std::string& labeling_path,
                  int threads, const std::string& static_csv,
                  const std::string& duration_csv) {
    tgr::Instance inst = tgr::parse_instance_text(read_file(instance_path));
    tgr::Labeling lab = tgr::parse_labeling_text(read_file(labeling_path), inst.graph);
    tgr::DurationMatrix dm = tgr::duration_matrix(inst.graph, lab, threads);
    json doc;
    doc["vertices"] = json::array();
    for (const std::string& id : inst.graph.ids()) doc["vertices"].push_back(id);
    doc["static"] = matrix_json(inst.dist);
    doc["durations"] = matrix_json(dm.durations);
    emit(doc);
    if (!static_csv.empty()) write_matrix_csv(static_csv, inst.graph, inst.dist);
    if (!duration_csv.empty()) write_matrix_csv(duration_csv, inst.graph, dm.durations);
    std::cerr << "distance matrices for " << inst.graph.n() << " vertices\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic temporal realization toolkit"};
    app.require_subcommand(1);

    int threads = 1;
    if (const char* env = std::getenv("TEMPO_THREADS")) {
        try {
            threads = std::max(1, std::stoi(env));
        } catch (...) {
            threads = 1;
        }
    }
    app.add_option("--threads", threads, "worker thread cap (default $TEMPO_THREADS or 1)");

    std::string in_a, in_b, out, family, kind;
    int delta = 0, k = 0;
    bool all = false, symmetric = false;
    std::string static_csv, duration_csv;
    BudgetFlags budget;

    CLI::App* validate = app.add_subcommand("validate", "validate an instance file");
    validate->add_option("instance", in_a, "instance JSON file")->required();

    CLI::App* solve = app.add_subcommand("solve", "solve an instance");
    solve->add_option("instance", in_a, "instance JSON file")->required();
    solve->add_flag("--all", all, "enumerate every solution");
    budget.attach(solve);

    CLI::App* check = app.add_subcommand("check", "check a labeling against an instance");
    check->add_option("instance", in_a, "instance JSON file")->required();
    check->add_option("labeling", in_b, "labeling JSON file")->required();

    CLI::App* gadget = app.add_subcommand("gadget", "emit a splice gadget");
    gadget->add_option("family", family,
                       "odd-k0 | odd-quarter | delta4 | odd-comb | even-comb | "
                       "even-comb-subgadget | auto")
        ->required();
    gadget->add_option("delta", delta, "period")->required();
    gadget->add_option("k", k, "slack budget")->required();
    gadget->add_option("--out", out, "also write the document to this file");

    CLI::App* reduce = app.add_subcommand("reduce", "build a reduction instance");
    reduce->add_option("kind", kind, "coloring | nae3sat | ttr2dittr")->required();
    reduce->add_option("input", in_a, "input JSON file")->required();
    reduce->add_option("--delta", delta, "period (coloring)");
    reduce->add_option("--k", k, "slack floor (ttr2dittr)");
    reduce->add_flag("--symmetric", symmetric, "mirror edges and bounds (nae3sat)");
    reduce->add_option("--out", out, "also write the document to this file");

    CLI::App* certify = app.add_subcommand("certify", "certify a gadget document");
    certify->add_option("gadget", in_a, "gadget JSON file")->required();
    budget.attach(certify);

    CLI::App* distances = app.add_subcommand("distances", "emit distance matrices");
    distances->add_option("instance", in_a, "instance JSON file")->required();
    distances->add_option("labeling", in_b, "labeling JSON file")->required();
    distances->add_option("--static-csv", static_csv, "write static distances as CSV here");
    distances->add_option("--duration-csv", duration_csv, "write fastest durations as CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << e.what() << "\n";
        emit(json{{"error", e.what()}, {"kind", "usage"}});
        return kExitInput;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(in_a);
        if (app.got_subcommand(solve)) return cmd_solve(in_a, budget, all);
        if (app.got_subcommand(check)) return cmd_check(in_a, in_b);
        if (app.got_subcommand(gadget)) return cmd_gadget(family, delta, k, out);
        if (app.got_subcommand(reduce)) {
            if (kind == "coloring") {
                if (delta == 0) throw tgr::InputError("coloring needs --delta");
                return cmd_reduce_coloring(in_a, delta, out);
            }
            if (kind == "nae3sat") return cmd_reduce_nae3sat(in_a, symmetric, out);
            if (kind == "ttr2dittr") return cmd_reduce_ttr(in_a, k, out);
            throw tgr::InputError("unknown reduction kind '" + kind + "'");
        }
        if (app.got_subcommand(certify)) return cmd_certify(in_a, budget);
        if (app.got_subcommand(distances))
            return cmd_distances(in_a, in_b, threads, static_csv, duration_csv);
    } catch (const tgr::DomainError& err) {
        emit(json{{"error", err.what()}, {"kind", "domain"}});
        std::cerr << "error: " << err.what() << "\n";
        return kExitFail;
    } catch (const tgr::InputError& err) {
        emit(json{{"error", err.what()}, {"kind", "input"}});
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    }
    return kExitInput;  // unreachable
}
