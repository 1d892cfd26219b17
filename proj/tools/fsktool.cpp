// fsktool: construct, verify and analyse maximal F_{s,k}-free graphs.
//
// Exit codes: 0 every check passed, 1 a check failed, 2 usage or I/O error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fsk/bipartite.hpp"
#include "fsk/construction.hpp"
#include "fsk/freeness.hpp"
#include "fsk/graph_io.hpp"
#include "fsk/pattern.hpp"
#include "fsk/report.hpp"
#include "fsk/stability.hpp"

namespace {

using namespace fsk;
namespace fs = std::filesystem;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string out;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::size_t max_vertices = 512;
    std::string budget = "100000000";

    SearchLimits limits() const { return {max_vertices, workers}; }
};

class Timer {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Accepts "12345", "1e7" and "10^7".
std::uint64_t parse_budget(const std::string& text) {
    auto digits = [&](const std::string& part) -> std::uint64_t {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad budget '" + text + "'");
        return std::stoull(part);
    };
    auto power = [&](std::uint64_t base, std::uint64_t exp) {
        std::uint64_t out = 1;
        for (std::uint64_t i = 0; i < exp; ++i) {
            if (out > std::numeric_limits<std::uint64_t>::max() / base) throw UsageError("budget too large");
            out *= base;
        }
        return out;
    };
    if (const auto caret = text.find('^'); caret != std::string::npos)
        return power(digits(text.substr(0, caret)), digits(text.substr(caret + 1)));
    if (const auto e = text.find_first_of("eE"); e != std::string::npos)
        return digits(text.substr(0, e)) * power(10, digits(text.substr(e + 1)));
    return digits(text);
}

Rational parse_alpha(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--alpha: ") + e.what());
    }
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

// Prints the report and, with --out, writes it next to the artifacts.
void emit(const Common& common, const Json& report, const std::map<std::string, std::string>& artifacts) {
    if (!common.out.empty()) {
        const fs::path dir(common.out);
        fs::create_directories(dir);
        for (const auto& [name, text] : artifacts) write_text(dir / name, text);
        write_text(dir / "report.json", report.dump(2) + "\n");
    }
    std::cout << report.dump(2) << "\n";
}

int verdict_code(const Json& report) {
    for (const auto& [name, ok] : report.at("verdicts").items())
        if (!ok.get<bool>()) return kExitFail;
    return kExitPass;
}

Graph load_graph(const std::string& path) {
    if (path.empty()) throw UsageError("--in is required");
    return read_graph_file(path);
}

int cmd_pattern(const Common& common, int s, int k) {
    Timer timer;
    if (s < 1 || k < 1) throw UsageError("pattern needs -s >= 1 and -k >= 1");
    const FskPattern p = build_fsk(s, k);
    Json report = report_header("pattern");
    report["parameters"] = {{"s", s}, {"k", k}};
    report["pattern"] = to_json(p);
    Graph minus_hub = p.graph;
    minus_hub.delete_edge(p.a, p.b);
    const int chi = chromatic_number(p.graph);
    const int chi_minus = chromatic_number(minus_hub);
    const std::vector<std::string> violations = pattern_violations(p);
    report["counts"] = {{"order", p.order()}, {"size", p.size()}, {"chi", chi}, {"chi_minus_hub", chi_minus}};
    report["verdicts"] = {{"order_formula", p.order() == fsk_order(s, k)},
                          {"size_formula", p.size() == static_cast<std::size_t>(2 * k * s + 1)},
                          {"structure", violations.empty()},
                          {"chi_is_3", chi == 3},
                          {"color_critical_hub", chi == 3 && chi_minus == 2}};
    if (!violations.empty()) report["violations"] = violations;
    report["graph6"] = encode_graph6(p.graph);
    report["timings_ms"] = {{"total", timer.ms()}};
    emit(common, report, {{"pattern.g6", encode_graph6(p.graph) + "\n"}});
    return verdict_code(report);
}

// Claims about the saturated member: X and Y independent, X_i-Y_i empty.
Json claims_on(const Graph& g, const ConstructionLayout& l) {
    bool blocks_empty = true;
    Json offending = Json::array();
    for (int i = 0; i < l.blocks; ++i)
        if (edges_between(g, l.x_block(i), l.y_block(i)) != 0) {
            blocks_empty = false;
            offending.push_back(i);
        }
    return {{"x_independent", is_independent(g, l.x_side())},
            {"y_independent", is_independent(g, l.y_side())},
            {"xi_yi_empty", blocks_empty},
            {"offending_blocks", offending}};
}

int cmd_construct(const Common& common, int n, int s, int k, const std::string& alpha_text, bool do_saturate) {
    Timer timer;
    const Rational alpha = parse_alpha(alpha_text);
    ConstructionLayout layout;
    try {
        layout = plan_layout(n, s, k, alpha);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const ConstructionResult result = build_min_member(layout);
    const Certificate cert = certify_structure(result);
    const EdgeBoundReport bound = edge_bound_check(result);

    Json report = report_header("construct");
    report["parameters"] = {{"n", n}, {"s", s}, {"k", k}, {"alpha", to_string(alpha)}, {"seed", common.seed}};
    report["layout"] = to_json(layout);
    report["certificate"] = to_json(cert);
    report["edge_bound"] = to_json(bound);
    Json counts{{"specified_edges", to_string(result.specified_edge_count)},
                {"enumerated_edges", result.graph.edges().size()}};
    Json verdicts{{"edge_count_matches", Integer(result.graph.edges().size()) == result.specified_edge_count},
                  {"certificate", cert.passed()}};
    Json timings{{"construct", timer.ms()}};
    std::map<std::string, std::string> artifacts{{"min_member.g6", encode_graph6(result.graph) + "\n"},
                                                 {"layout.json", to_json(layout).dump(2) + "\n"}};
    if (do_saturate) {
        Timer sat_timer;
        const SaturationResult sat = saturate(result.graph, s, k, common.limits());
        const MaximalityResult maximal = is_maximal_fsk_free(sat.graph, s, k, common.limits());
        counts["saturated_edges"] = sat.graph.edges().size();
        counts["added_edges"] = sat.added.size();
        verdicts["saturated_maximal"] = maximal.maximal;
        const Json claims = claims_on(sat.graph, layout);
        report["saturated_claims"] = claims;
        report["saturated_claims"]["expected_pass_only"] = !layout.theorem_scale();
        verdicts["saturated_x_independent"] = claims["x_independent"];
        verdicts["saturated_y_independent"] = claims["y_independent"];
        verdicts["saturated_xi_yi_empty"] = claims["xi_yi_empty"];
        artifacts["saturated.g6"] = encode_graph6(sat.graph) + "\n";
        timings["saturate"] = sat_timer.ms();
    }
    report["counts"] = counts;
    report["verdicts"] = verdicts;
    timings["total"] = timer.ms();
    report["timings_ms"] = timings;
    emit(common, report, artifacts);
    return verdict_code(report);
}

int cmd_verify(const Common& common, const std::string& in, const std::vector<std::string>& checks, int s, int k,
               const std::string& layout_path) {
    Timer timer;
    const Graph g = load_graph(in);
    Json report = report_header("verify");
    report["parameters"] = {{"input", in}, {"s", s}, {"k", k}, {"checks", checks}};
    Json verdicts = Json::object();
    Json details = Json::object();
    Json timings = Json::object();
    for (const std::string& check : checks) {
        Timer t;
        if (check == "freeness") {
            const FreenessResult r = is_fsk_free(g, s, k, common.limits());
            verdicts["freeness"] = r.free;
            details["freeness"] = {{"free", r.free}};
            if (r.witness) details["freeness"]["witness"] = to_json(*r.witness);
        } else if (check == "maximality") {
            try {
                const MaximalityResult r = is_maximal_fsk_free(g, s, k, common.limits());
                verdicts["maximality"] = r.maximal;
                Json failing = Json::array();
                for (const Edge& e : r.failing) failing.push_back(to_json(e));
                details["maximality"] = {{"maximal", r.maximal}, {"failing_non_edges", failing}};
            } catch (const NotFskFree& e) {
                verdicts["maximality"] = false;
                details["maximality"] = {{"maximal", false}, {"not_free_witness", to_json(e.witness())}};
            }
        } else if (check == "biclique") {
            const BicliqueSearch r = max_induced_complete_bipartite(g, parse_budget(common.budget));
            const std::vector<std::string> bad = biclique_violations(g, r.best);
            verdicts["biclique"] = r.optimal && bad.empty();
            details["biclique"] = to_json(r);
            if (!bad.empty()) details["biclique"]["violations"] = bad;
        } else if (check == "certificate") {
            if (layout_path.empty()) throw UsageError("--check certificate needs --layout");
            std::ifstream file(layout_path);
            if (!file) throw std::runtime_error("cannot read " + layout_path);
            Json layout_json;
            try {
                layout_json = Json::parse(file);
            } catch (const Json::parse_error& e) {
                throw ParseError(std::string("layout is not JSON: ") + e.what(), e.byte);
            }
            ConstructionLayout layout = layout_from_json(layout_json);
            if (static_cast<std::size_t>(layout.n) != g.vertex_count())
                throw UsageError("layout order does not match the graph");
            const Certificate cert = certify_structure({g, layout, specified_edge_count(layout)});
            verdicts["certificate"] = cert.passed();
            details["certificate"] = to_json(cert);
        }
        timings[check] = t.ms();
    }
    report["counts"] = {{"n", g.vertex_count()}, {"edges", g.edge_count()}};
    report["verdicts"] = verdicts;
    report["details"] = details;
    timings["total"] = timer.ms();
    report["timings_ms"] = timings;
    emit(common, report, {});
    return verdict_code(report);
}

int cmd_stability(const Common& common, const std::string& in, int s, int k, int h, const std::string& alpha_text) {
    Timer timer;
    const Graph g = load_graph(in);
    if (h <= 0) h = static_cast<int>(fsk_order(s, k));
    Json report = report_header("stability");
    report["parameters"] = {{"input", in}, {"s", s}, {"k", k}, {"h", h}, {"seed", common.seed}};
    if (!alpha_text.empty()) report["parameters"]["alpha"] = alpha_text;

    try {
        const MaximalityResult maximal = is_maximal_fsk_free(g, s, k, common.limits());
        if (!maximal.maximal) {
            report["verdicts"] = {{"input_maximal_free", false}};
            report["rejection"] = {{"reason", "not maximal"}, {"failing_non_edge", to_json(maximal.failing.front())},
                                   {"failing_count", maximal.failing.size()}};
            std::cerr << "fsktool: input is not maximal; adding " << maximal.failing.front().first << "-"
                      << maximal.failing.front().second << " creates no copy\n";
            emit(common, report, {});
            return kExitFail;
        }
    } catch (const NotFskFree& e) {
        report["verdicts"] = {{"input_maximal_free", false}};
        report["rejection"] = {{"reason", "contains a copy"}, {"witness", to_json(e.witness())}};
        std::cerr << "fsktool: " << e.what() << "\n";
        emit(common, report, {});
        return kExitFail;
    }

    const PartitionOutcome part = build_uvt_partition(g, h, common.seed);
    const PipelineResult pipe = deletion_pipeline(g, part.partition, s, k, common.limits());
    const std::vector<std::string> core_bad = biclique_violations(g, pipe.core);
    const std::vector<std::string> trace_bad = trace_violations(pipe, part.partition);
    const std::vector<std::string> part_bad = partition_violations(g, part.partition);

    report["partition"] = to_json(part);
    report["trace"] = to_json(pipe.trace);
    report["core"] = {{"a", to_json(pipe.core.a)}, {"b", to_json(pipe.core.b)}, {"size", pipe.core.size()}};
    report["counts"] = {{"n", g.vertex_count()},
                        {"edges", g.edge_count()},
                        {"t_size", part.partition.t.count()},
                        {"core_size", pipe.core.size()},
                        {"deleted_total", pipe.trace.deleted_total},
                        {"steps", pipe.trace.steps.size()}};
    report["verdicts"] = {{"input_maximal_free", true},
                          {"partition_valid", part_bad.empty()},
                          {"core_induced_complete_bipartite", core_bad.empty()},
                          {"trace_consistent", trace_bad.empty()}};
    if (!alpha_text.empty())
        report["bound"] = to_json(bound_report(pipe.trace, static_cast<int>(g.vertex_count()), s, k,
                                               parse_alpha(alpha_text)));
    const InducedSubgraph core = induced_subgraph(g, pipe.core.a | pipe.core.b);
    report["timings_ms"] = {{"total", timer.ms()}};
    emit(common, report, {{"core.g6", encode_graph6(core.graph) + "\n"}});
    return verdict_code(report);
}

int cmd_max_bipartite(const Common& common, const std::string& in) {
    Timer timer;
    const Graph g = load_graph(in);
    const BicliqueSearch r = max_induced_complete_bipartite(g, parse_budget(common.budget));
    const std::vector<std::string> bad = biclique_violations(g, r.best);
    Json report = report_header("max-bipartite");
    report["parameters"] = {{"input", in}, {"budget", common.budget}};
    report["biclique"] = to_json(r);
    report["counts"] = {{"n", g.vertex_count()}, {"edges", g.edge_count()}, {"size", r.best.size()}};
    report["verdicts"] = {{"valid", bad.empty()}};
    report["timings_ms"] = {{"total", timer.ms()}};
    emit(common, report, {});
    return verdict_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, verify and analyse maximal F_{s,k}-free graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fsk::kToolVersion));

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", common.out, "Directory for the report and artifacts");
        sub->add_option("--seed", common.seed, "Seed for randomized substeps");
        sub->add_option("--workers", common.workers, "Worker threads (0 = all cores)");
        sub->add_option("--max-vertices", common.max_vertices, "Refuse exhaustive searches above this order");
    };

    int s = 2;
    int k = 2;
    int n = 0;
    int h = 0;
    std::string alpha = "1/2";
    std::string stability_alpha;
    std::string in;
    std::string layout;
    bool do_saturate = false;
    std::vector<std::string> checks;

    CLI::App* pattern = app.add_subcommand("pattern", "Build F_{s,k} and validate it");
    pattern->add_option("-s", s, "Number of odd cycles")->required();
    pattern->add_option("-k", k, "Cycles have length 2k+1")->required();
    add_common(pattern);

    CLI::App* construct = app.add_subcommand("construct", "Build the minimum-edge member of the construction");
    construct->add_option("-n", n, "Number of vertices")->required();
    construct->add_option("-s", s, "Number of odd cycles")->required();
    construct->add_option("-k", k, "Cycles have length 2k+1")->required();
    construct->add_option("--alpha", alpha, "Exact rational p/q in (0, 1/2]");
    construct->add_flag("--saturate", do_saturate, "Also saturate and verify maximality");
    add_common(construct);

    CLI::App* verify = app.add_subcommand("verify", "Run checks on a graph");
    verify->add_option("--in", in, "graph6 or edge-list file")->required();
    verify->add_option("--check", checks, "freeness, maximality, biclique, certificate")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember({"freeness", "maximality", "biclique", "certificate"}));
    verify->add_option("-s", s, "Number of odd cycles");
    verify->add_option("-k", k, "Cycles have length 2k+1");
    verify->add_option("--layout", layout, "Layout JSON for the certificate check");
    verify->add_option("--budget", common.budget, "Branch-and-bound node budget (e.g. 10^7)");
    add_common(verify);

    CLI::App* stability = app.add_subcommand("stability", "Partition and deletion pipeline on a maximal graph");
    stability->add_option("--in", in, "graph6 or edge-list file")->required();
    stability->add_option("-s", s, "Number of odd cycles");
    stability->add_option("-k", k, "Cycles have length 2k+1");
    stability->add_option("--threshold", h, "Partition threshold h (default: order of F_{s,k})");
    stability->add_option("--alpha", stability_alpha, "Exact rational for the bound report");
    add_common(stability);

    CLI::App* max_bip = app.add_subcommand("max-bipartite", "Maximum induced complete bipartite subgraph");
    max_bip->add_option("--in", in, "graph6 or edge-list file")->required();
    max_bip->add_option("--budget", common.budget, "Branch-and-bound node budget (e.g. 10^7)");
    add_common(max_bip);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if ((verify->parsed() || stability->parsed()) && (s < 1 || k < 1))
            throw UsageError("-s and -k must be at least 1");
        if (pattern->parsed()) return cmd_pattern(common, s, k);
        if (construct->parsed()) return cmd_construct(common, n, s, k, alpha, do_saturate);
        if (verify->parsed()) return cmd_verify(common, in, checks, s, k, layout);
        if (stability->parsed()) return cmd_stability(common, in, s, k, h, stability_alpha);
        if (max_bip->parsed()) return cmd_max_bipartite(common, in);
    } catch (const UsageError& e) {
        std::cerr << "fsktool: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InfeasibleLayout& e) {
        std::cerr << "fsktool: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SearchLimitExceeded& e) {
        std::cerr << "fsktool: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "fsktool: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fsktool: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "fsktool: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
