#pragma once

#include "resgraph/graph.hpp"
#include "resgraph/intersection.hpp"
#include "resgraph/laufer.hpp"
#include "resgraph/numeric.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace resgraph {

/// A chain (path) graph: the dual graph of a cyclic quotient singularity.
inline bool is_chain(const WeightedDualGraph& g) {
    if (!g.is_tree()) return false;
    for (int i = 0; i < g.size(); ++i)
        if (g.degree(i) > 2) return false;
    return true;
}

/// Continued-fraction value of a weight chain read center-outward:
/// q/p = w1 - 1/(w2 - 1/(... - 1/wk)), returned in lowest terms with
/// 0 < p < q. All weights must be >= 2.
inline std::pair<Int, Int> branch_fraction(const std::vector<long long>& weights) {
    if (weights.empty())
        throw Error(ErrorCode::OutOfRange, "branch fraction of an empty weight list");
    for (long long w : weights)
        if (w < 2)
            throw Error(ErrorCode::WeightBelowTwo,
                        "chain weight " + std::to_string(w) + " is below 2");
    Int q = weights.back(), p = 1;
    for (int i = static_cast<int>(weights.size()) - 2; i >= 0; --i) {
        Int nq = Int(weights[i]) * q - p;
        p = q;
        q = nq;
    }
    // consecutive continuants are coprime, so q/p is already reduced
    return {q, p};
}

/// Hirzebruch-Jung expansion of q/p: the unique weight chain (all entries
/// >= 2) whose continued fraction is q/p. Inverse of branch_fraction.
inline std::vector<long long> fraction_to_branch(const Int& q, const Int& p) {
    if (!(0 < p && p < q))
        throw Error(ErrorCode::OutOfRange,
                    "fraction " + q.str() + "/" + p.str() + " must satisfy 0 < p < q");
    if (gcd(q, p) != 1)
        throw Error(ErrorCode::NotCoprime, q.str() + "/" + p.str() + " is not in lowest terms");
    std::vector<long long> weights;
    Int a = q, b = p;
    while (b > 0) {
        Int w = (a + b - 1) / b;  // ceil(a/b)
        weights.push_back(w.convert_to<long long>());
        Int nb = w * b - a;
        a = b;
        b = nb;
    }
    return weights;
}

/// One branch of a star-shaped graph, read from the central curve outward.
struct SeifertBranch {
    Int q, p;  // branch_fraction of the weights
    std::vector<long long> weights;
    std::vector<int> vertices;  // graph indices, center-outward
};

/// Star-shaped decomposition: the unique central curve of degree >= 3 plus
/// its branches, each a chain hanging off the center.
struct SeifertData {
    int center = -1;
    long long central_weight = 0;
    std::vector<SeifertBranch> branches;  // sorted ascending by (q, p)
};

inline SeifertData star_decompose(const WeightedDualGraph& g) {
    int center = -1;
    for (int i = 0; i < g.size(); ++i) {
        if (g.degree(i) >= 3) {
            if (center >= 0)
                throw Error(ErrorCode::NotStarShaped,
                            "two vertices of degree >= 3: '" + g.id(center) + "' and '" +
                                g.id(i) + "'");
            center = i;
        }
    }
    if (center < 0)
        throw Error(ErrorCode::NotStarShaped, "no vertex of degree >= 3; graph is a chain or cycle");

    SeifertData sd;
    sd.center = center;
    sd.central_weight = g.weight(center);
    for (int first : g.neighbors(center)) {
        // walk outward; every branch vertex must have degree <= 2 and the
        // walk must never return to the center (that would be a cycle)
        SeifertBranch br;
        int prev = center, cur = first;
        for (;;) {
            if (cur == center)
                throw Error(ErrorCode::NotStarShaped,
                            "branch through '" + g.id(first) + "' closes a cycle at the center");
            br.vertices.push_back(cur);
            br.weights.push_back(g.weight(cur));
            int next = -1;
            for (int nb : g.neighbors(cur))
                if (nb != prev) next = nb;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        std::tie(br.q, br.p) = branch_fraction(br.weights);
        sd.branches.push_back(std::move(br));
    }
    std::sort(sd.branches.begin(), sd.branches.end(),
              [](const SeifertBranch& a, const SeifertBranch& b) {
                  return std::tie(a.q, a.p, a.weights) < std::tie(b.q, b.p, b.weights);
              });
    return sd;
}

namespace detail {

inline bool platonic_triple(const Int& q1, const Int& q2, const Int& q3) {
    if (q1 == 2 && q2 == 2) return true;  // (2,2,n)
    return q1 == 2 && q2 == 3 && (q3 == 3 || q3 == 4 || q3 == 5);
}

inline std::optional<SeifertData> star_or_none(const WeightedDualGraph& g) {
    try {
        return star_decompose(g);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotStarShaped) throw;
        return std::nullopt;
    }
}

/// Structural + discrepancy log-terminality with precomputed pieces.
/// Assumes the graph is minimal and m is its form, already verified to be
/// negative definite by the caller.
inline bool log_terminal_core(const WeightedDualGraph& g, const IntersectionForm& m,
                              const std::optional<SeifertData>& sd) {
    bool structural;
    if (is_chain(g)) {
        structural = true;
    } else {
        structural = sd && sd->branches.size() == 3 &&
                     platonic_triple(sd->branches[0].q, sd->branches[1].q, sd->branches[2].q);
    }

    std::vector<Rat> a = solve_definite(m, canonical_intersections(g).k);
    bool discrepancy = true;
    for (const Rat& x : a)
        if (x <= -1) discrepancy = false;

    if (structural != discrepancy)
        throw Error(ErrorCode::CrossCheckMismatch,
                    "platonic-triple and discrepancy tests disagree on log-terminality");
    return structural;
}

}  // namespace detail

/// Quotient-singularity (log-terminal) test. Structural criterion: a chain,
/// or a star with exactly three branches whose orders form a platonic triple
/// (2,2,n), (2,3,3), (2,3,4), (2,3,5). The result is cross-validated against
/// the discrepancy criterion (every coefficient of the K-numerical solution
/// > -1); any disagreement is a bug signal.
inline bool is_log_terminal(const WeightedDualGraph& g) {
    if (!is_minimal_resolution(g))
        throw Error(ErrorCode::NotMinimalResolution,
                    "log-terminality is decided on the minimal resolution");
    IntersectionForm m = intersection_form(g);
    if (!is_negative_definite(m))
        throw Error(ErrorCode::NotNegativeDefinite,
                    "log-terminality needs a negative-definite form");
    std::optional<SeifertData> sd;
    if (!is_chain(g)) sd = detail::star_or_none(g);
    return detail::log_terminal_core(g, m, sd);
}

/// Pinkham-Demazure presentation of a star-shaped graph: the rational
/// divisor D = E - sum p_i/q_i P_i on the projective line, with deg E equal
/// to the central weight. In the display the integral part is merged into
/// the first deg E fractional coefficients, which reproduces the customary
/// normal form when the central weight is 2; other central weights are
/// flagged as a nonstandard integral part.
struct PDDivisor {
    long long degree = 0;                      // deg E = central weight
    std::vector<std::pair<Int, Int>> fractions;  // (q_i, p_i), sorted
    Rat total_degree;                          // deg D = degree - sum p_i/q_i
    bool standard_integral_part = true;        // degree == 2
    std::string display;
};

inline PDDivisor pd_divisor_from(const SeifertData& sd) {
    PDDivisor d;
    d.degree = sd.central_weight;
    Rat deg(d.degree);
    for (const auto& br : sd.branches) {
        d.fractions.emplace_back(br.q, br.p);
        deg -= Rat(br.p, br.q);
    }
    d.total_degree = deg;
    if (deg <= 0)
        throw Error(ErrorCode::DegreeNotPositive,
                    "divisor degree " + fraction_string(deg) + " is not positive");
    d.standard_integral_part = (d.degree == 2);

    const int r = static_cast<int>(d.fractions.size());
    std::ostringstream out;
    for (int i = 0; i < r; ++i) {
        Rat coeff = -Rat(d.fractions[i].second, d.fractions[i].first);
        if (i < d.degree) coeff += 1;
        if (i == 0 && d.degree > r) coeff += Int(d.degree - r);  // excess integral part
        if (i == 0) {
            if (coeff < 0) out << "-" << short_fraction_string(-coeff);
            else out << short_fraction_string(coeff);
        } else {
            out << (coeff < 0 ? " - " : " + ") << short_fraction_string(abs(coeff));
        }
        out << " P_" << (i + 1);
    }
    d.display = out.str();
    return d;
}

inline PDDivisor pd_divisor(const WeightedDualGraph& g) {
    return pd_divisor_from(star_decompose(g));
}

/// Star graph with central weight b and one Hirzebruch-Jung chain per
/// fraction. Vertex ids: center "e0", branch i vertex j "a<i>_<j>"
/// (center-outward, 1-based).
inline WeightedDualGraph graph_from_pd(long long b,
                                       const std::vector<std::pair<Int, Int>>& branches) {
    if (b < 1) throw Error(ErrorCode::OutOfRange, "central weight must be at least 1");
    Rat deg(b);
    for (const auto& [q, p] : branches) deg -= Rat(p, q);
    if (deg <= 0)
        throw Error(ErrorCode::DegreeNotPositive,
                    "divisor degree " + fraction_string(deg) + " is not positive");

    std::vector<std::pair<std::string, long long>> vs{{"e0", b}};
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        std::vector<long long> weights = fraction_to_branch(branches[i].first, branches[i].second);
        std::string prev = "e0";
        for (std::size_t j = 0; j < weights.size(); ++j) {
            std::string id = "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            vs.emplace_back(id, weights[j]);
            es.emplace_back(prev, id);
            prev = id;
        }
    }
    WeightedDualGraph g = WeightedDualGraph::build(vs, es);
    if (!is_negative_definite(g))
        throw Error(ErrorCode::NotNegativeDefinite, "the plumbed star is not negative definite");
    return g;
}

/// Result of matching against the classification table of nearly Gorenstein
/// non-cyclic quotient singularities: item 0 means no match, item 1 is the
/// two-parameter (2,2,n) family with its (k, s), items 2-11 are sporadic.
struct DingMatch {
    int item = 0;
    long long k = -1;
    long long s = -1;
};

namespace detail {

inline const std::array<std::array<std::pair<int, int>, 3>, 10>& ding_sporadic_table() {
    // fractions (q, p) sorted ascending, rows for items 2..11
    static const std::array<std::array<std::pair<int, int>, 3>, 10> table{{
        {{{2, 1}, {3, 1}, {3, 1}}},  // (2)  1/2 P1 + 2/3 P2 - 1/3 P3
        {{{2, 1}, {3, 1}, {3, 2}}},  // (3)  1/2 P1 + 2/3 P2 - 2/3 P3
        {{{2, 1}, {3, 2}, {4, 1}}},  // (4)  1/2 P1 + 1/3 P2 - 1/4 P3
        {{{2, 1}, {3, 1}, {4, 1}}},  // (5)  1/2 P1 + 2/3 P2 - 1/4 P3
        {{{2, 1}, {3, 1}, {4, 3}}},  // (6)  1/2 P1 + 2/3 P2 - 3/4 P3
        {{{2, 1}, {3, 2}, {5, 1}}},  // (7)  1/2 P1 + 1/3 P2 - 1/5 P3
        {{{2, 1}, {3, 2}, {5, 3}}},  // (8)  1/2 P1 + 1/3 P2 - 3/5 P3
        {{{2, 1}, {3, 1}, {5, 1}}},  // (9)  1/2 P1 + 2/3 P2 - 1/5 P3
        {{{2, 1}, {3, 1}, {5, 3}}},  // (10) 1/2 P1 + 2/3 P2 - 3/5 P3
        {{{2, 1}, {3, 1}, {5, 4}}},  // (11) 1/2 P1 + 2/3 P2 - 4/5 P3
    }};
    return table;
}

/// Table lookup against sorted branch fractions; no precondition checks.
inline DingMatch ding_lookup(const SeifertData& sd) {
    DingMatch match;
    if (sd.central_weight != 2 || sd.branches.size() != 3) return match;

    std::array<std::pair<Int, Int>, 3> f;
    for (int i = 0; i < 3; ++i) f[i] = {sd.branches[i].q, sd.branches[i].p};

    if (f[0] == std::make_pair(Int(2), Int(1)) && f[1] == std::make_pair(Int(2), Int(1))) {
        // family (1): third fraction ((k+1)s - k, ks - (k-1)), k >= 0, s >= 3
        const Int q = f[2].first, p = f[2].second;
        Int s = q - p + 1;
        if (s >= 3 && (p - 1) % (q - p) == 0) {
            Int k = (p - 1) / (q - p);
            if ((k + 1) * s - k == q && k * s - (k - 1) == p) {
                match.item = 1;
                match.k = k.convert_to<long long>();
                match.s = s.convert_to<long long>();
            }
        }
        return match;
    }

    const auto& table = ding_sporadic_table();
    for (std::size_t row = 0; row < table.size(); ++row) {
        bool same = true;
        for (int i = 0; i < 3; ++i)
            if (f[i].first != table[row][i].first || f[i].second != table[row][i].second)
                same = false;
        if (same) {
            match.item = static_cast<int>(row) + 2;
            return match;
        }
    }
    return match;
}

}  // namespace detail

/// Match a star-shaped, non-cyclic, log-terminal, non-Gorenstein graph
/// against the nearly Gorenstein quotient table. Central weight 2 is
/// required by every table row.
inline DingMatch match_ding(const WeightedDualGraph& g) {
    SeifertData sd = star_decompose(g);  // NotStarShaped covers chains too
    if (!is_log_terminal(g))
        throw Error(ErrorCode::NotQuotient, "graph is not a quotient singularity");
    bool all_two = true;
    for (int i = 0; i < g.size(); ++i)
        if (g.weight(i) != 2) all_two = false;
    if (all_two)
        throw Error(ErrorCode::GorensteinInput,
                    "the table classifies non-Gorenstein quotients only");
    return detail::ding_lookup(sd);
}

}  // namespace resgraph
