#pragma once

#include "resgraph/cycle.hpp"
#include "resgraph/error.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/intersection.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace resgraph {

/// One addition step of a computation sequence: at C_index the vertex was
/// added because the previous cycle met it with the recorded value (> 0).
struct ComputationStep {
    int index;
    int vertex;
    Int value;
};

/// A computation sequence C_1, C_2, ..., C_m. For a fundamental-cycle run,
/// C_1 = E_seed; for a lift, C_1 is the given start cycle and seed is empty.
struct ComputationSequence {
    std::optional<int> seed;
    std::vector<ComputationStep> steps;
    Cycle result;
};

namespace detail {

inline std::vector<Int> form_times(const IntersectionForm& m, const Cycle& c) {
    std::vector<Int> s(m.size(), 0);
    for (int j = 0; j < m.size(); ++j) {
        if (c[j] == 0) continue;
        for (int i = 0; i < m.size(); ++i) s[i] += m.at(i, j) * c[j];
    }
    return s;
}

/// Generalized Laufer walk: starting from `start`, repeatedly add the
/// smallest-index vertex j with L_j + C . E_j > 0. For a negative-definite
/// form this terminates at the minimal cycle C >= start with L + C anti-nef:
/// any solution D >= start keeps C <= D throughout, since a violating vertex
/// with C_j = D_j would make D violate too. Callers must have checked
/// definiteness; the walk itself does not.
inline std::pair<Cycle, ComputationSequence> antinef_walk(const IntersectionForm& m,
                                                          const std::vector<Int>& L, Cycle start,
                                                          std::optional<int> seed) {
    ComputationSequence seq;
    seq.seed = seed;
    std::vector<Int> s = form_times(m, start);
    int index = 1;
    for (;;) {
        int violating = -1;
        for (int j = 0; j < m.size(); ++j)
            if (L[j] + s[j] > 0) {
                violating = j;
                break;
            }
        if (violating < 0) break;
        ++index;
        seq.steps.push_back({index, violating, L[violating] + s[violating]});
        start[violating] += 1;
        for (int i = 0; i < m.size(); ++i) s[i] += m.at(i, violating);
    }
    seq.result = start;
    return {std::move(start), std::move(seq)};
}

inline std::pair<Cycle, ComputationSequence> fundamental(const IntersectionForm& m) {
    return antinef_walk(m, std::vector<Int>(m.size(), 0), Cycle::unit(m.size(), 0), 0);
}

inline Int chi_value(const IntersectionForm& m, const std::vector<Int>& k, const Cycle& c) {
    Int cc = 0, ck = 0;
    for (int i = 0; i < m.size(); ++i) {
        if (c[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < m.size(); ++j)
            if (c[j] != 0) row += m.at(i, j) * c[j];
        cc += c[i] * row;
        ck += c[i] * k[i];
    }
    Int numerator = -(cc + ck);
    if (numerator % 2 != 0)
        throw Error(ErrorCode::NonIntegralResult, "C(C+K) is odd; weights are inconsistent");
    return numerator / 2;
}

}  // namespace detail

inline bool is_anti_nef(const WeightedDualGraph& g, const Cycle& c) {
    if (c.size() != g.size())
        throw Error(ErrorCode::DimensionMismatch, "cycle size does not match the graph");
    IntersectionForm m = intersection_form(g);
    for (const Int& v : detail::form_times(m, c))
        if (v > 0) return false;
    return true;
}

/// The fundamental cycle Z_f: the minimal nonzero anti-nef cycle, computed
/// by the deterministic computation sequence seeded at the first vertex,
/// always adding the smallest-index vertex the current cycle meets
/// positively. Requires a negative-definite form (otherwise the sequence
/// would never terminate).
inline std::pair<Cycle, ComputationSequence> fundamental_cycle(const WeightedDualGraph& g) {
    IntersectionForm m = intersection_form(g);
    if (!is_negative_definite(m))
        throw Error(ErrorCode::NotNegativeDefinite,
                    "fundamental cycle is only defined for negative-definite graphs");
    return detail::fundamental(m);
}

/// chi(C) = -C(C+K_X)/2; an integer for every integral cycle on a valid
/// graph.
inline Int chi(const WeightedDualGraph& g, const Cycle& c) {
    if (c.size() != g.size())
        throw Error(ErrorCode::DimensionMismatch, "cycle size does not match the graph");
    return detail::chi_value(intersection_form(g), canonical_intersections(g).k, c);
}

struct RationalityReport {
    bool is_rational = false;
    Int p_f = 0;                         // fundamental genus 1 - chi(Z_f)
    std::optional<int> first_violation;  // first step index with value > 1
};

/// Rationality via the computation-sequence test: rational iff every step
/// meets the growing cycle in exactly one point. The fundamental genus
/// p_f = 1 - chi(Z_f) is computed independently and the two witnesses must
/// agree.
inline RationalityReport rationality(const WeightedDualGraph& g) {
    auto [zf, seq] = fundamental_cycle(g);
    RationalityReport r;
    r.is_rational = true;
    for (const auto& step : seq.steps)
        if (step.value > 1) {
            r.is_rational = false;
            r.first_violation = step.index;
            break;
        }
    r.p_f = 1 - chi(g, zf);
    if (r.is_rational != (r.p_f == 0))
        throw Error(ErrorCode::InternalDisagreement,
                    "step-value test and fundamental genus disagree on rationality");
    return r;
}

/// Multiplicity e(A) = -Z_f^2 of a rational singularity; the identity
/// e = 2 + K_X . Z_f is asserted as a self-check.
inline Int multiplicity(const WeightedDualGraph& g) {
    if (!rationality(g).is_rational)
        throw Error(ErrorCode::NotRational, "multiplicity formula needs a rational graph");
    auto [zf, seq] = fundamental_cycle(g);
    IntersectionForm m = intersection_form(g);
    Int e = -pairing(m, zf, zf);
    Int kz = 0;
    CanonicalNumerics k = canonical_intersections(g);
    for (int i = 0; i < g.size(); ++i) kz += k.k[i] * zf[i];
    if (e != 2 + kz)
        throw Error(ErrorCode::InternalDisagreement, "-Z_f^2 and 2 + K.Z_f disagree");
    return e;
}

/// Minimal cycle C >= start with L_i + C . E_i <= 0 for every i, where L is
/// the vector of intersection numbers L . E_i of some divisor.
inline std::pair<Cycle, ComputationSequence> min_antinef_lift(const WeightedDualGraph& g,
                                                              const std::vector<Int>& L,
                                                              const Cycle& start) {
    if (static_cast<int>(L.size()) != g.size() || start.size() != g.size())
        throw Error(ErrorCode::DimensionMismatch, "lift inputs do not match the graph");
    if (!start.is_effective())
        throw Error(ErrorCode::OutOfRange, "lift start cycle must be effective");
    IntersectionForm m = intersection_form(g);
    if (!is_negative_definite(m))
        throw Error(ErrorCode::NotNegativeDefinite,
                    "anti-nef lifts are only defined for negative-definite graphs");
    return detail::antinef_walk(m, L, start, std::nullopt);
}

/// The canonical trace cycle F: minimal with K_X + F anti-nef. Zero exactly
/// when K_X is numerically trivial (all weights 2); otherwise the lift of K
/// above Z_f, so F >= Z_f.
inline Cycle trace_cycle(const WeightedDualGraph& g) {
    if (!rationality(g).is_rational)
        throw Error(ErrorCode::NotRational, "trace cycle is computed on rational graphs");
    if (!is_minimal_resolution(g))
        throw Error(ErrorCode::NotMinimalResolution,
                    "trace cycle is computed on the minimal resolution");
    CanonicalNumerics k = canonical_intersections(g);
    bool canonical_trivial = true;
    for (const Int& v : k.k)
        if (v != 0) canonical_trivial = false;
    if (canonical_trivial) return Cycle::zero(g.size());
    auto [zf, fseq] = fundamental_cycle(g);
    return min_antinef_lift(g, k.k, zf).first;
}

/// Colength of the ideal cut out by an anti-nef cycle C on a rational graph:
/// length(A / H^0(O(-C))) = chi(C), with the zero cycle giving 0.
inline Int colength(const WeightedDualGraph& g, const Cycle& c) {
    if (!rationality(g).is_rational)
        throw Error(ErrorCode::NotRational, "colength formula needs a rational graph");
    if (!is_anti_nef(g, c))
        throw Error(ErrorCode::NotAntiNef, "colength is only defined for anti-nef cycles");
    return chi(g, c);
}

}  // namespace resgraph
