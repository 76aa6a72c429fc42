#pragma once

#include "resgraph/classify.hpp"
#include "resgraph/cycle.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/intersection.hpp"
#include "resgraph/laufer.hpp"
#include "resgraph/quotient.hpp"

#include <json.hpp>

#include <string>

namespace resgraph {

/// All JSON output uses ordered maps so key order is stable across runs.
using ojson = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "resgraph/report/1";

inline ojson graph_to_json(const WeightedDualGraph& g) {
    ojson vertices = ojson::array();
    for (int i = 0; i < g.size(); ++i)
        vertices.push_back(ojson{{"id", g.id(i)}, {"weight", g.weight(i)}});
    ojson edges = ojson::array();
    for (auto [u, v] : g.edges()) edges.push_back(ojson::array({g.id(u), g.id(v)}));
    return ojson{{"vertex_count", g.size()}, {"vertices", vertices}, {"edges", edges}};
}

/// Integer cycles keyed by vertex id, in vertex order.
inline ojson cycle_to_json(const WeightedDualGraph& g, const Cycle& c) {
    ojson out = ojson::object();
    for (int i = 0; i < g.size(); ++i) out[g.id(i)] = c[i].str();
    return out;
}

/// Rational cycles keyed by vertex id, rendered as "num/den".
inline ojson qcycle_to_json(const WeightedDualGraph& g, const QCycle& c) {
    ojson out = ojson::object();
    for (int i = 0; i < g.size(); ++i) out[g.id(i)] = fraction_string(c[i]);
    return out;
}

inline ojson seifert_to_json(const SeifertData& sd, const WeightedDualGraph& g) {
    ojson branches = ojson::array();
    for (const auto& br : sd.branches) {
        ojson ids = ojson::array();
        for (int v : br.vertices) ids.push_back(g.id(v));
        branches.push_back(ojson{{"q", br.q.str()},
                                 {"p", br.p.str()},
                                 {"weights", br.weights},
                                 {"vertices", ids}});
    }
    return ojson{{"center", g.id(sd.center)},
                 {"central_weight", sd.central_weight},
                 {"branches", branches}};
}

inline ojson pd_to_json(const PDDivisor& d) {
    ojson fr = ojson::array();
    for (const auto& [q, p] : d.fractions) fr.push_back(p.str() + "/" + q.str());
    return ojson{{"integral_degree", d.degree},
                 {"fractions", fr},
                 {"total_degree", fraction_string(d.total_degree)},
                 {"standard_integral_part", d.standard_integral_part},
                 {"display", d.display}};
}

/// Quotient-singularity facts; everything derivable without negative
/// definiteness is reported unconditionally, the rest only when defined.
inline ojson quotient_to_json(const WeightedDualGraph& g) {
    ojson q = ojson::object();
    const bool chain = is_chain(g);
    q["chain"] = chain;
    if (chain) {
        std::vector<long long> weights;
        for (int i : detail::chain_order(g)) weights.push_back(g.weight(i));
        bool hj_ok = true;
        for (long long w : weights)
            if (w < 2) hj_ok = false;
        if (hj_ok) {
            auto [qq, pp] = branch_fraction(weights);
            q["cyclic_type"] = qq.str() + "/" + pp.str();
        } else {
            q["cyclic_type"] = nullptr;
        }
    }

    if (is_minimal_resolution(g) && is_negative_definite(g)) {
        q["log_terminal"] = is_log_terminal(g);
    } else {
        q["log_terminal"] = nullptr;
    }

    try {
        SeifertData sd = star_decompose(g);
        q["star"] = seifert_to_json(sd, g);
        q["pd_divisor"] = pd_to_json(pd_divisor_from(sd));
    } catch (const Error& e) {
        if (is_internal_error(e.code())) throw;
        q["star"] = nullptr;
        q["pd_divisor"] = nullptr;
    }

    if (q["log_terminal"].is_boolean() && q["log_terminal"].get<bool>() && !chain) {
        bool all_two = true;
        for (int i = 0; i < g.size(); ++i)
            if (g.weight(i) != 2) all_two = false;
        if (!all_two) {
            DingMatch dm = match_ding(g);
            ojson item = ojson::object();
            item["item"] = dm.item == 0 ? ojson(nullptr) : ojson(dm.item);
            if (dm.item == 1) {
                item["k"] = dm.k;
                item["s"] = dm.s;
            }
            q["ng_quotient_table"] = item;
            q["end_curve_colength"] = end_curve_colength(g).str();
        } else {
            q["ng_quotient_table"] = nullptr;
            q["end_curve_colength"] = nullptr;
        }
    } else {
        q["ng_quotient_table"] = nullptr;
        q["end_curve_colength"] = nullptr;
    }
    return q;
}

/// The full classification report. Fields that are undefined for the input
/// (for example NG data on a non-rational graph) are null rather than
/// omitted, so the schema is fixed.
inline ojson classify_to_json(const WeightedDualGraph& g) {
    ojson r;
    r["schema"] = kReportSchema;
    r["graph"] = graph_to_json(g);

    IntersectionForm m = intersection_form(g);
    const bool negdef = is_negative_definite(m);
    const bool minimal = is_minimal_resolution(g);
    r["negative_definite"] = negdef;
    r["minimal_resolution"] = minimal;

    if (!negdef) {
        r["rational"] = nullptr;
        r["p_f"] = nullptr;
        r["fundamental_cycle"] = nullptr;
        r["chi_fundamental"] = nullptr;
        r["multiplicity"] = nullptr;
        r["classification"] = nullptr;
        r["quotient"] = nullptr;
        return r;
    }

    RationalityReport rat = rationality(g);
    auto [zf, seq] = fundamental_cycle(g);
    r["rational"] = rat.is_rational;
    r["p_f"] = rat.p_f.str();
    r["fundamental_cycle"] = cycle_to_json(g, zf);
    r["chi_fundamental"] = chi(g, zf).str();
    r["multiplicity"] = rat.is_rational ? ojson(multiplicity(g).str()) : ojson(nullptr);

    if (rat.is_rational && minimal) {
        NGReport ng = nearly_gorenstein(g);
        ojson c;
        c["gorenstein"] = ng.gorenstein;
        c["nearly_gorenstein"] = ng.nearly_gorenstein;
        c["criteria"] = ojson{
            {"trace_equals_fundamental", ng.criterion_trace_equals_fundamental},
            {"canonical_plus_fundamental_antinef", ng.criterion_canonical_antinef},
            {"per_vertex_bound", ng.criterion_numeric}};
        c["structural_case"] = structural_case_name(ng.structural_case);
        ojson wit = ojson::array();
        for (int w : ng.witnesses) wit.push_back(g.id(w));
        c["witnesses"] = wit;
        c["almost_reduced"] = is_almost_reduced(g);
        c["ade_pattern"] = ade_pattern_name(match_ade(g).pattern);
        c["trace_cycle"] = cycle_to_json(g, ng.trace);
        c["trace_colength"] = ng.trace_colength.str();
        c["chi_trace"] = ng.trace_colength.str();
        r["classification"] = c;
    } else {
        r["classification"] = nullptr;
    }

    r["quotient"] = quotient_to_json(g);
    return r;
}

/// Focused quotient report for the `quotient` command.
inline ojson quotient_report_to_json(const WeightedDualGraph& g) {
    ojson r;
    r["schema"] = kReportSchema;
    r["graph"] = graph_to_json(g);
    r["negative_definite"] = is_negative_definite(g);
    r["minimal_resolution"] = is_minimal_resolution(g);
    r["quotient"] = quotient_to_json(g);
    return r;
}

}  // namespace resgraph
