#pragma once

#include "resgraph/cycle.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/intersection.hpp"
#include "resgraph/laufer.hpp"
#include "resgraph/quotient.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace resgraph {

/// Structural shape of the fundamental cycle behind near-Gorensteinness:
/// CaseA = irreducible exceptional set, CaseB = one coefficient-2 curve
/// meeting the rest once, CaseC = two reduced curves meeting the rest once.
enum class StructuralCase { None, CaseA, CaseB, CaseC };

inline const char* structural_case_name(StructuralCase c) {
    switch (c) {
        case StructuralCase::CaseA: return "4a";
        case StructuralCase::CaseB: return "4b";
        case StructuralCase::CaseC: return "4c";
        case StructuralCase::None: return "none";
    }
    return "none";
}

struct StructuralWitness {
    StructuralCase kind = StructuralCase::None;
    std::vector<int> witnesses;  // the special vertex (CaseB) or pair (CaseC)
    bool ambiguous = false;      // never set: the defining equations pin the witnesses
};

enum class ADEPattern { None, A, D, E6, E7, E8 };

inline const char* ade_pattern_name(ADEPattern p) {
    switch (p) {
        case ADEPattern::A: return "A";
        case ADEPattern::D: return "D";
        case ADEPattern::E6: return "E6";
        case ADEPattern::E7: return "E7";
        case ADEPattern::E8: return "E8";
        case ADEPattern::None: return "none";
    }
    return "none";
}

/// Match of the graph together with its fundamental cycle against one of the
/// five figure patterns; roles maps each vertex to its figure position.
struct ADEMatch {
    ADEPattern pattern = ADEPattern::None;
    std::vector<std::pair<int, std::string>> roles;
};

struct NGReport {
    bool gorenstein = false;
    bool nearly_gorenstein = false;
    // the three equivalent criteria, each computed independently
    bool criterion_trace_equals_fundamental = false;  // F = Z_f
    bool criterion_canonical_antinef = false;         // K_X + Z_f anti-nef
    bool criterion_numeric = false;                   // Z_f E_i <= E_i^2 + 2 where b_i >= 3
    StructuralCase structural_case = StructuralCase::None;
    std::vector<int> witnesses;
    bool witness_ambiguous = false;
    Int e = 0;               // multiplicity -Z_f^2
    Int trace_colength = 0;  // length of A / canonical trace ideal
    Cycle fundamental;       // Z_f
    Cycle trace;             // F
};

namespace detail {

inline StructuralWitness structural_core(const WeightedDualGraph& g, const IntersectionForm& m,
                                         const Cycle& zf) {
    StructuralWitness w;
    if (g.size() == 1) {
        w.kind = StructuralCase::CaseA;
        w.witnesses.push_back(0);
        return w;
    }
    std::vector<Int> s = form_times(m, zf);
    // v_i = (Z_f - E_i) . E_i = Z_f.E_i + b_i
    std::vector<int> ones;
    bool others_are_two = true;
    for (int i = 0; i < g.size(); ++i) {
        Int v = s[i] + g.weight(i);
        if (v == 1) ones.push_back(i);
        else if (v != 2) others_are_two = false;
    }
    if (!others_are_two) return w;
    if (ones.size() == 1 && zf[ones[0]] == 2) {
        w.kind = StructuralCase::CaseB;
        w.witnesses = ones;
    } else if (ones.size() == 2 && zf[ones[0]] == 1 && zf[ones[1]] == 1) {
        w.kind = StructuralCase::CaseC;
        w.witnesses = ones;
    }
    return w;
}

struct NGCore {
    bool gorenstein = false;
    bool c_trace = false, c_antinef = false, c_numeric = false;
    StructuralWitness structural;
    Cycle trace;
    Int e = 0;
    Int trace_colength = 0;
    bool ng = false;
};

/// Assumes: negative definite, rational, minimal (checked by callers).
inline NGCore ng_core(const WeightedDualGraph& g, const IntersectionForm& m,
                      const std::vector<Int>& k, const Cycle& zf) {
    NGCore r;
    r.gorenstein = true;
    for (const Int& v : k)
        if (v != 0) r.gorenstein = false;

    std::vector<Int> s = form_times(m, zf);

    r.c_antinef = true;
    for (int i = 0; i < g.size(); ++i)
        if (k[i] + s[i] > 0) r.c_antinef = false;

    r.c_numeric = true;
    for (int i = 0; i < g.size(); ++i)
        if (g.weight(i) >= 3 && s[i] > 2 - g.weight(i)) r.c_numeric = false;

    r.trace = r.gorenstein ? Cycle::zero(g.size()) : antinef_walk(m, k, zf, std::nullopt).first;
    r.c_trace = (r.trace == zf);

    r.structural = structural_core(g, m, zf);

    if (!r.gorenstein) {
        const bool case_hit = r.structural.kind != StructuralCase::None;
        if (r.c_trace != r.c_antinef || r.c_trace != r.c_numeric || r.c_trace != case_hit)
            throw Error(ErrorCode::CriterionDisagreement,
                        "the equivalent near-Gorenstein criteria disagree");
    }
    r.ng = r.gorenstein || r.c_trace;

    Int kz = 0;
    for (int i = 0; i < g.size(); ++i) kz += k[i] * zf[i];
    r.e = -pairing(m, zf, zf);
    if (r.e != 2 + kz)
        throw Error(ErrorCode::InternalDisagreement, "-Z_f^2 and 2 + K.Z_f disagree");
    r.trace_colength = chi_value(m, k, r.trace);
    return r;
}

inline std::vector<int> chain_order(const WeightedDualGraph& g) {
    // vertices of a path graph from one end to the other, starting at the
    // lower-indexed end
    if (g.size() == 1) return {0};
    int start = -1;
    for (int i = 0; i < g.size(); ++i)
        if (g.degree(i) == 1) {
            start = i;
            break;
        }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < g.size()) {
        int next = -1;
        for (int nb : g.neighbors(cur))
            if (nb != prev) next = nb;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

/// Branch of a star read center-outward, with per-vertex (weight, cff)
/// constraints. Weight 0 in a template slot means "any weight".
inline bool branch_matches(const WeightedDualGraph& g, const Cycle& zf,
                           const std::vector<int>& branch,
                           const std::vector<std::pair<int, int>>& tmpl) {
    if (branch.size() != tmpl.size()) return false;
    for (std::size_t i = 0; i < branch.size(); ++i) {
        auto [w, z] = tmpl[i];
        if (w != 0 && g.weight(branch[i]) != w) return false;
        if (zf[branch[i]] != z) return false;
    }
    return true;
}

inline ADEMatch ade_core(const WeightedDualGraph& g, const Cycle& zf) {
    ADEMatch match;
    if (!g.is_tree()) return match;

    int center = -1;
    for (int i = 0; i < g.size(); ++i) {
        if (g.degree(i) >= 3) {
            if (center >= 0 || g.degree(i) > 3) return match;  // at most one fork, degree 3
            center = i;
        }
    }

    if (center < 0) {
        // chain: Type A iff the fundamental cycle is reduced (weights free)
        if (!zf.is_reduced()) return match;
        match.pattern = ADEPattern::A;
        std::vector<int> order = chain_order(g);
        for (std::size_t i = 0; i < order.size(); ++i)
            match.roles.emplace_back(order[i], "a" + std::to_string(i + 1));
        return match;
    }

    std::vector<std::vector<int>> branches;
    for (int first : g.neighbors(center)) {
        std::vector<int> br{first};
        int prev = center, cur = first;
        for (;;) {
            int next = -1;
            for (int nb : g.neighbors(cur))
                if (nb != prev) next = nb;
            if (next < 0) break;
            br.push_back(next);
            prev = cur;
            cur = next;
        }
        branches.push_back(std::move(br));
    }
    std::sort(branches.begin(), branches.end(),
              [](const auto& a, const auto& b) {
                  return std::make_pair(a.size(), a[0]) < std::make_pair(b.size(), b[0]);
              });
    const std::size_t l0 = branches[0].size(), l1 = branches[1].size(), l2 = branches[2].size();

    auto finish = [&](ADEPattern p) {
        match.pattern = p;
        match.roles.emplace_back(center, "center");
        for (int bi = 0; bi < 3; ++bi)
            for (std::size_t j = 0; j < branches[bi].size(); ++j)
                match.roles.emplace_back(branches[bi][j], "b" + std::to_string(bi + 1) + "_" +
                                                              std::to_string(j + 1));
        return match;
    };

    if (l0 == 1 && l1 == 1) {
        // Type D: fork curve of weight 2 with coefficient 2, two reduced
        // leaves, and one chain of (2,2)-curves ending in a reduced curve
        if (g.weight(center) != 2 || zf[center] != 2) return match;
        if (zf[branches[0][0]] != 1 || zf[branches[1][0]] != 1) return match;
        std::vector<std::pair<int, int>> tail(l2, {2, 2});
        tail.back() = {0, 1};
        if (!branch_matches(g, zf, branches[2], tail)) return match;
        return finish(ADEPattern::D);
    }
    if (l0 == 1 && l1 == 2 && l2 == 2) {
        if (g.weight(center) != 2 || zf[center] != 3) return match;
        if (!branch_matches(g, zf, branches[0], {{2, 2}})) return match;
        if (!branch_matches(g, zf, branches[1], {{2, 2}, {0, 1}})) return match;
        if (!branch_matches(g, zf, branches[2], {{2, 2}, {0, 1}})) return match;
        return finish(ADEPattern::E6);
    }
    if (l0 == 1 && l1 == 2 && l2 == 3) {
        if (g.weight(center) != 2 || zf[center] != 4) return match;
        if (!branch_matches(g, zf, branches[0], {{2, 2}})) return match;
        if (!branch_matches(g, zf, branches[1], {{2, 3}, {2, 2}})) return match;
        if (!branch_matches(g, zf, branches[2], {{2, 3}, {2, 2}, {0, 1}})) return match;
        return finish(ADEPattern::E7);
    }
    if (l0 == 1 && l1 == 2 && l2 == 4) {
        if (g.weight(center) != 2 || zf[center] != 6) return match;
        if (!branch_matches(g, zf, branches[0], {{2, 3}})) return match;
        if (!branch_matches(g, zf, branches[1], {{2, 4}, {2, 2}})) return match;
        if (!branch_matches(g, zf, branches[2], {{2, 5}, {2, 4}, {2, 3}, {2, 2}})) return match;
        return finish(ADEPattern::E8);
    }
    return match;
}

inline void require_rational_minimal(const WeightedDualGraph& g) {
    if (!rationality(g).is_rational)
        throw Error(ErrorCode::NotRational, "operation requires a rational graph");
    if (!is_minimal_resolution(g))
        throw Error(ErrorCode::NotMinimalResolution, "operation requires the minimal resolution");
}

}  // namespace detail

/// Gorenstein rational singularities are the rational double points: every
/// curve is a (-2)-curve.
inline bool is_gorenstein(const WeightedDualGraph& g) {
    detail::require_rational_minimal(g);
    for (int i = 0; i < g.size(); ++i)
        if (g.weight(i) != 2) return false;
    return true;
}

inline StructuralWitness structural_case(const WeightedDualGraph& g) {
    detail::require_rational_minimal(g);
    auto [zf, seq] = fundamental_cycle(g);
    return detail::structural_core(g, intersection_form(g), zf);
}

/// Full near-Gorenstein report: the three equivalent criteria evaluated
/// independently, the structural case, multiplicity and trace colength. On
/// non-Gorenstein input any disagreement between the criteria raises
/// CriterionDisagreement.
inline NGReport nearly_gorenstein(const WeightedDualGraph& g) {
    detail::require_rational_minimal(g);
    IntersectionForm m = intersection_form(g);
    auto [zf, seq] = detail::fundamental(m);
    detail::NGCore core = detail::ng_core(g, m, canonical_intersections(g).k, zf);

    NGReport r;
    r.gorenstein = core.gorenstein;
    r.nearly_gorenstein = core.ng;
    r.criterion_trace_equals_fundamental = core.c_trace;
    r.criterion_canonical_antinef = core.c_antinef;
    r.criterion_numeric = core.c_numeric;
    r.structural_case = core.structural.kind;
    r.witnesses = core.structural.witnesses;
    r.witness_ambiguous = core.structural.ambiguous;
    r.e = core.e;
    r.trace_colength = core.trace_colength;
    r.fundamental = zf;
    r.trace = core.trace;
    return r;
}

/// The fundamental cycle is almost reduced when every curve with weight
/// at least 3 carries coefficient 1.
inline bool is_almost_reduced(const WeightedDualGraph& g) {
    if (!rationality(g).is_rational)
        throw Error(ErrorCode::NotRational, "almost-reducedness is read off Z_f on rational graphs");
    auto [zf, seq] = fundamental_cycle(g);
    for (int i = 0; i < g.size(); ++i)
        if (g.weight(i) >= 3 && zf[i] != 1) return false;
    return true;
}

/// Match against the five shape patterns of nearly Gorenstein graphs with
/// almost reduced fundamental cycle. Graphs whose cycle is not almost
/// reduced can never match (every pattern forces almost-reduced labels).
inline ADEMatch match_ade(const WeightedDualGraph& g) {
    detail::require_rational_minimal(g);
    auto [zf, seq] = fundamental_cycle(g);
    return detail::ade_core(g, zf);
}

/// Trace colength of a non-cyclic, non-Gorenstein quotient singularity via
/// the end-curve formula e(A) - 1 - sum over ends of (b_i - 2); the value is
/// checked against chi of the trace cycle.
inline Int end_curve_colength(const WeightedDualGraph& g) {
    if (is_chain(g))
        throw Error(ErrorCode::CyclicQuotient, "the end-curve formula excludes cyclic quotients");
    if (!is_log_terminal(g))
        throw Error(ErrorCode::NotQuotient, "the end-curve formula needs a quotient singularity");
    bool all_two = true;
    for (int i = 0; i < g.size(); ++i)
        if (g.weight(i) != 2) all_two = false;
    if (all_two)
        throw Error(ErrorCode::GorensteinInput, "the end-curve formula excludes Gorenstein graphs");

    Int value = multiplicity(g) - 1;
    for (int i = 0; i < g.size(); ++i)
        if (g.degree(i) == 1) value -= Int(g.weight(i)) - 2;

    Int direct = colength(g, trace_cycle(g));
    if (value != direct)
        throw Error(ErrorCode::FormulaMismatch,
                    "end-curve formula gives " + value.str() + " but chi(F) is " + direct.str());
    return value;
}

/// Minimal number of generators of the ideal cut out by an anti-nef cycle C
/// on a rational graph: -C.Z_f + 1.
inline Int mu_numeric(const WeightedDualGraph& g, const Cycle& c) {
    if (!rationality(g).is_rational)
        throw Error(ErrorCode::NotRational, "generator count needs a rational graph");
    if (!is_anti_nef(g, c))
        throw Error(ErrorCode::NotAntiNef, "generator count needs an anti-nef cycle");
    auto [zf, seq] = fundamental_cycle(g);
    return -pairing(intersection_form(g), c, zf) + 1;
}

/// Numeric Ulrich test for the ideal of an anti-nef cycle C:
/// e(A) = (mu(I) - 1) * length(A/I).
inline bool is_ulrich_numeric(const WeightedDualGraph& g, const Cycle& c) {
    if (c.is_zero())
        throw Error(ErrorCode::OutOfRange, "the Ulrich test needs a nonzero cycle");
    return multiplicity(g) == (mu_numeric(g, c) - 1) * colength(g, c);
}

}  // namespace resgraph
