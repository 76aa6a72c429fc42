// resgraph: exact invariants of resolution graphs of normal surface
// singularities. Reads the line-oriented graph DSL, classifies rationality,
// Gorenstein / nearly Gorenstein status, trace colengths and quotient data,
// and reproduces the two classification theorems by exhaustive enumeration.

#include "resgraph/canonical.hpp"
#include "resgraph/classify.hpp"
#include "resgraph/dsl.hpp"
#include "resgraph/enumerate.hpp"
#include "resgraph/report.hpp"
#include "resgraph/reproduce.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace resgraph;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string cycle_line(const WeightedDualGraph& g, const Cycle& c) {
    if (c.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < g.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) out << " ";
        out << g.id(i) << ":" << c[i];
        first = false;
    }
    return out.str();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int run_check(const std::string& path) {
    GraphDocument doc = parse_graph_document(read_input(path));
    const auto& g = doc.graph;
    std::cout << "ok: " << g.size() << " vertices, " << g.edges().size() << " edges, "
              << (g.is_tree() ? "tree" : "contains a cycle") << "\n";
    std::cout << "negative definite: " << yesno(is_negative_definite(g)) << "\n";
    std::cout << "minimal resolution: " << yesno(is_minimal_resolution(g)) << "\n";
    return 0;
}

int run_classify(const std::string& path, bool as_json) {
    WeightedDualGraph g = parse_graph(read_input(path));
    ojson r = classify_to_json(g);
    if (as_json) {
        std::cout << r.dump(2) << "\n";
        return 0;
    }
    std::cout << "graph: " << g.size() << " vertices, " << g.edges().size() << " edges\n";
    std::cout << "negative definite: " << yesno(r["negative_definite"].get<bool>()) << "\n";
    std::cout << "minimal resolution: " << yesno(r["minimal_resolution"].get<bool>()) << "\n";
    if (!r["negative_definite"].get<bool>()) return 0;

    auto [zf, seq] = fundamental_cycle(g);
    std::cout << "rational: " << yesno(r["rational"].get<bool>()) << " (p_f = "
              << r["p_f"].get<std::string>() << ")\n";
    std::cout << "fundamental cycle Z_f: " << cycle_line(g, zf) << "\n";
    if (!r["multiplicity"].is_null())
        std::cout << "multiplicity e: " << r["multiplicity"].get<std::string>() << "\n";

    if (!r["classification"].is_null()) {
        const ojson& c = r["classification"];
        std::cout << "gorenstein: " << yesno(c["gorenstein"].get<bool>()) << "\n";
        std::cout << "nearly gorenstein: " << yesno(c["nearly_gorenstein"].get<bool>()) << "\n";
        std::cout << "structural case: " << c["structural_case"].get<std::string>();
        if (!c["witnesses"].empty()) {
            std::cout << " (witness";
            for (const auto& w : c["witnesses"]) std::cout << " " << w.get<std::string>();
            std::cout << ")";
        }
        std::cout << "\n";
        NGReport ng = nearly_gorenstein(g);
        std::cout << "trace cycle F: " << cycle_line(g, ng.trace) << "\n";
        std::cout << "trace colength: " << c["trace_colength"].get<std::string>() << "\n";
        std::cout << "almost reduced: " << yesno(c["almost_reduced"].get<bool>())
                  << ", pattern: " << c["ade_pattern"].get<std::string>() << "\n";
    }

    const ojson& q = r["quotient"];
    if (q["log_terminal"].is_boolean()) {
        std::cout << "quotient (log terminal): " << yesno(q["log_terminal"].get<bool>());
        if (q["chain"].get<bool>()) std::cout << " [cyclic]";
        std::cout << "\n";
        if (!q["pd_divisor"].is_null())
            std::cout << "divisor: " << q["pd_divisor"]["display"].get<std::string>() << "\n";
    }
    return 0;
}

int run_quotient(const std::string& path, bool as_json) {
    WeightedDualGraph g = parse_graph(read_input(path));
    ojson r = quotient_report_to_json(g);
    if (as_json) {
        std::cout << r.dump(2) << "\n";
        return 0;
    }
    const ojson& q = r["quotient"];
    std::cout << "chain: " << yesno(q["chain"].get<bool>()) << "\n";
    if (q.contains("cyclic_type") && !q["cyclic_type"].is_null())
        std::cout << "cyclic type q/p: " << q["cyclic_type"].get<std::string>() << "\n";
    if (q["log_terminal"].is_boolean())
        std::cout << "log terminal: " << yesno(q["log_terminal"].get<bool>()) << "\n";
    if (!q["star"].is_null()) {
        const ojson& s = q["star"];
        std::cout << "star: center " << s["center"].get<std::string>() << " (weight "
                  << s["central_weight"] << "), branches:";
        for (const auto& b : s["branches"])
            std::cout << " " << b["q"].get<std::string>() << "/" << b["p"].get<std::string>();
        std::cout << "\n";
        std::cout << "divisor: " << q["pd_divisor"]["display"].get<std::string>() << "\n";
    }
    if (!q["ng_quotient_table"].is_null()) {
        const ojson& item = q["ng_quotient_table"];
        if (item["item"].is_null())
            std::cout << "NG quotient table: no match\n";
        else
            std::cout << "NG quotient table: item " << item["item"] << "\n";
    }
    if (!q["end_curve_colength"].is_null())
        std::cout << "trace colength (end-curve formula): "
                  << q["end_curve_colength"].get<std::string>() << "\n";
    return 0;
}

ojson row_to_json(const CensusRow& row) {
    ojson r;
    r["key"] = row.key;
    r["n"] = row.n;
    r["weights"] = row.weights;
    ojson edges = ojson::array();
    for (auto [u, v] : row.edges) edges.push_back(ojson::array({u, v}));
    r["edges"] = edges;
    r["negative_definite"] = row.negative_definite;
    r["minimal"] = row.minimal;
    r["chain"] = row.chain;
    auto opt_bool = [](const std::optional<bool>& b) {
        return b ? ojson(*b) : ojson(nullptr);
    };
    r["rational"] = opt_bool(row.rational);
    r["gorenstein"] = opt_bool(row.gorenstein);
    r["nearly_gorenstein"] = opt_bool(row.nearly_gorenstein);
    r["almost_reduced"] = opt_bool(row.almost_reduced);
    r["log_terminal"] = opt_bool(row.log_terminal);
    r["e"] = row.e ? ojson(row.e->str()) : ojson(nullptr);
    r["trace_colength"] = row.trace_colength ? ojson(row.trace_colength->str()) : ojson(nullptr);
    r["ade_pattern"] = row.ade ? ojson(ade_pattern_name(*row.ade)) : ojson(nullptr);
    r["table_item"] = row.ding.item == 0 ? ojson(nullptr) : ojson(row.ding.item);
    return r;
}

int run_enumerate(int max_vertices, int max_weight, bool all_graphs, bool as_json) {
    CensusOptions opt;
    opt.max_vertices = max_vertices;
    opt.max_weight = max_weight;
    opt.trees_only = !all_graphs;
    long rows = 0;
    if (!as_json)
        std::cout << "n\tweights\tnegdef\trational\tgor\tng\talmred\tlogterm\tchain\te\t"
                     "colength\tpattern\titem\n";
    enumerate_graphs(opt, [&](const CensusRow& row) {
        ++rows;
        if (as_json) {
            std::cout << row_to_json(row).dump() << "\n";
            return;
        }
        auto flag = [](const std::optional<bool>& b) {
            return !b ? std::string("-") : (*b ? std::string("y") : std::string("n"));
        };
        std::ostringstream w;
        for (std::size_t i = 0; i < row.weights.size(); ++i)
            w << (i ? "," : "") << row.weights[i];
        std::cout << row.n << "\t" << w.str() << "\t" << (row.negative_definite ? "y" : "n")
                  << "\t" << flag(row.rational) << "\t" << flag(row.gorenstein) << "\t"
                  << flag(row.nearly_gorenstein) << "\t" << flag(row.almost_reduced) << "\t"
                  << flag(row.log_terminal) << "\t" << (row.chain ? "y" : "n") << "\t"
                  << (row.e ? row.e->str() : "-") << "\t"
                  << (row.trace_colength ? row.trace_colength->str() : "-") << "\t"
                  << (row.ade ? ade_pattern_name(*row.ade) : "-") << "\t"
                  << (row.ding.item ? std::to_string(row.ding.item) : "-") << "\n";
    });
    std::cerr << rows << " graphs\n";
    return 0;
}

int run_reproduce_arng(int max_vertices, int max_weight, bool as_json) {
    ArngReport rep = reproduce_arng(max_vertices, max_weight);
    if (as_json) {
        ojson r;
        r["schema"] = kReportSchema;
        r["check"] = "arng";
        r["max_vertices"] = rep.max_vertices;
        r["max_weight"] = rep.max_weight;
        r["universe"] = rep.universe;
        r["almost_reduced_ng"] = rep.almost_reduced_ng;
        r["pattern_matched"] = rep.pattern_matched;
        r["pattern_counts"] = rep.pattern_counts;
        ojson mm = ojson::array();
        for (const auto& m : rep.only_ng) mm.push_back(m.key + " " + m.description);
        for (const auto& m : rep.only_pattern) mm.push_back(m.key + " " + m.description);
        r["mismatches"] = mm;
        r["ok"] = rep.ok();
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << "universe (neg.def. rational minimal trees, n <= " << rep.max_vertices
                  << ", weights <= " << rep.max_weight << "): " << rep.universe << "\n";
        std::cout << "almost reduced and nearly Gorenstein: " << rep.almost_reduced_ng << "\n";
        std::cout << "pattern matched: " << rep.pattern_matched;
        for (const auto& [name, count] : rep.pattern_counts)
            std::cout << "  " << name << "=" << count;
        std::cout << "\n";
        for (const auto& m : rep.only_ng)
            std::cout << "MISMATCH " << m.description << ": " << m.key << "\n";
        for (const auto& m : rep.only_pattern)
            std::cout << "MISMATCH " << m.description << ": " << m.key << "\n";
        std::cout << (rep.ok() ? "PASS" : "FAIL") << ": the two sets coincide\n";
    }
    return rep.ok() ? 0 : 1;
}

int run_reproduce_ding(int k_max, int s_max, bool as_json) {
    DingReport rep = reproduce_ding(k_max, s_max);
    if (as_json) {
        ojson r;
        r["schema"] = kReportSchema;
        r["check"] = "ding";
        r["k_max"] = rep.k_max;
        r["s_max"] = rep.s_max;
        r["enumerated"] = rep.enumerated;
        r["gorenstein_skipped"] = rep.gorenstein_skipped;
        r["probes"] = rep.probes;
        r["formula_checks"] = rep.formula_checks;
        ojson fam = ojson::array();
        for (const auto& h : rep.family_hits)
            fam.push_back(ojson{{"k", h.k}, {"s", h.s}, {"display", h.display}});
        r["family_hits"] = fam;
        r["family_beyond_window"] = rep.family_beyond_window;
        ojson spo = ojson::array();
        for (const auto& h : rep.sporadic_hits)
            spo.push_back(ojson{{"item", h.item}, {"display", h.display}});
        r["sporadic_hits"] = spo;
        r["item5_found"] = rep.item5_found;
        ojson problems = ojson::array();
        for (const auto& m : rep.unexpected_ng) problems.push_back("unexpected NG: " + m.description);
        for (const auto& m : rep.missing) problems.push_back("missing: " + m.description);
        for (const auto& m : rep.probe_failures) problems.push_back("probe: " + m.description);
        r["problems"] = problems;
        r["ok"] = rep.ok();
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << "enumerated central-weight-2 platonic stars: " << rep.enumerated
                  << " (Gorenstein: " << rep.gorenstein_skipped << ")\n";
        std::cout << "family hits in window k <= " << rep.k_max << ", s <= " << rep.s_max << ": "
                  << rep.family_hits.size() << " (beyond window: " << rep.family_beyond_window
                  << ")\n";
        std::cout << "sporadic hits:";
        for (const auto& h : rep.sporadic_hits) std::cout << " " << h.item;
        std::cout << "\n";
        std::cout << "item 5 (1/2 P_1 + 2/3 P_2 - 1/4 P_3) present: " << yesno(rep.item5_found)
                  << "\n";
        std::cout << "central-weight-3 probes, all non-NG: " << rep.probes << "\n";
        std::cout << "end-curve colength checks: " << rep.formula_checks << "\n";
        for (const auto& m : rep.unexpected_ng) std::cout << "UNEXPECTED NG: " << m.description << "\n";
        for (const auto& m : rep.missing) std::cout << "MISSING: " << m.description << "\n";
        for (const auto& m : rep.probe_failures) std::cout << "PROBE FAILURE: " << m.description << "\n";
        std::cout << (rep.ok() ? "PASS" : "FAIL") << ": classification reproduced\n";
    }
    return rep.ok() ? 0 : 1;
}

int run_from_pd(long long center, const std::vector<std::string>& branch_specs, bool as_json) {
    std::vector<std::pair<Int, Int>> branches;
    for (const std::string& s : branch_specs) {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            throw Error(ErrorCode::SyntaxError, "branch '" + s + "' is not of the form q/p");
        branches.emplace_back(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }
    WeightedDualGraph g = graph_from_pd(center, branches);
    if (as_json) {
        ojson r;
        r["schema"] = kReportSchema;
        r["graph"] = graph_to_json(g);
        r["dsl"] = emit(g);
        r["canonical_key"] = canonical_key(g);
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << emit(g);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of resolution graphs of normal surface singularities"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false;

    auto* check = app.add_subcommand("check", "parse and validate a graph file");
    check->add_option("file", path, "graph file, or - for stdin")->required();

    auto* classify = app.add_subcommand("classify", "full classification report");
    classify->add_option("file", path, "graph file, or - for stdin")->required();
    classify->add_flag("--json", as_json, "emit JSON");

    auto* quotient = app.add_subcommand("quotient", "quotient-singularity data");
    quotient->add_option("file", path, "graph file, or - for stdin")->required();
    quotient->add_flag("--json", as_json, "emit JSON");

    int max_vertices = 5, max_weight = 3;
    bool trees_only = false, all_graphs = false;
    auto* enumerate = app.add_subcommand("enumerate", "census of weighted graphs up to isomorphism");
    enumerate->add_option("--max-vertices", max_vertices, "vertex bound")->required();
    enumerate->add_option("--max-weight", max_weight, "weight bound")->required();
    enumerate->add_flag("--trees-only", trees_only, "trees only (default)");
    enumerate->add_flag("--all-graphs", all_graphs, "include graphs with cycles (slow)");
    enumerate->add_flag("--json", as_json, "one JSON object per line");

    auto* reproduce = app.add_subcommand("reproduce", "re-derive a classification theorem");
    std::string which;
    int b1 = -1, b2 = -1;
    reproduce->add_option("which", which, "arng or ding")->required();
    reproduce->add_option("bound1", b1, "vertices (arng) or k_max (ding)");
    reproduce->add_option("bound2", b2, "weights (arng) or s_max (ding)");
    reproduce->add_flag("--json", as_json, "emit JSON");

    long long center = 0;
    std::vector<std::string> branch_specs;
    auto* from_pd = app.add_subcommand("from-pd", "build a star graph from divisor data");
    from_pd->add_option("--center", center, "integral degree (central weight)")->required();
    from_pd->add_option("--branch", branch_specs, "branch fraction q/p (repeatable)");
    from_pd->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
        if (*check) return run_check(path);
        if (*classify) return run_classify(path, as_json);
        if (*quotient) return run_quotient(path, as_json);
        if (*enumerate) return run_enumerate(max_vertices, max_weight, all_graphs, as_json);
        if (*reproduce) {
            if (which == "arng")
                return run_reproduce_arng(b1 < 0 ? 8 : b1, b2 < 0 ? 5 : b2, as_json);
            if (which == "ding")
                return run_reproduce_ding(b1 < 0 ? 5 : b1, b2 < 0 ? 8 : b2, as_json);
            std::cerr << "error: unknown reproduction '" << which << "' (use arng or ding)\n";
            return 2;
        }
        if (*from_pd) return run_from_pd(center, branch_specs, as_json);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const resgraph::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return resgraph::is_internal_error(e.code()) ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
