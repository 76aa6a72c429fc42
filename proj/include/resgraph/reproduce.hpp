#pragma once

#include "resgraph/classify.hpp"
#include "resgraph/enumerate.hpp"
#include "resgraph/quotient.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace resgraph {

/// One graph on which the two sides of a set-equality check differ.
struct ReproMismatch {
    std::string key;
    std::string description;
};

/// Reproduction of the almost-reduced classification: over every rational
/// minimal tree in the bounds, {almost reduced and nearly Gorenstein} must
/// coincide with {matches one of the five patterns}.
struct ArngReport {
    int max_vertices = 0;
    int max_weight = 0;
    long universe = 0;  // negative-definite rational minimal trees
    long almost_reduced_ng = 0;
    long pattern_matched = 0;
    std::map<std::string, long> pattern_counts;  // "A", "D", "E6", "E7", "E8"
    std::vector<ReproMismatch> only_ng;          // NG+almost reduced, no pattern
    std::vector<ReproMismatch> only_pattern;     // pattern, not NG+almost reduced
    bool ok() const { return only_ng.empty() && only_pattern.empty(); }
};

inline ArngReport reproduce_arng(int max_vertices, int max_weight) {
    ArngReport report;
    report.max_vertices = max_vertices;
    report.max_weight = max_weight;

    CensusOptions opt;
    opt.max_vertices = max_vertices;
    opt.max_weight = max_weight;
    opt.trees_only = true;
    opt.analyze_log_terminal = false;
    opt.analyze_table = false;

    enumerate_graphs(opt, [&](const CensusRow& row) {
        if (!row.negative_definite || !row.minimal) return;
        if (!row.rational || !*row.rational) return;
        ++report.universe;
        const bool ar_ng = *row.almost_reduced && *row.nearly_gorenstein;
        const bool matched = *row.ade != ADEPattern::None;
        if (ar_ng) ++report.almost_reduced_ng;
        if (matched) {
            ++report.pattern_matched;
            ++report.pattern_counts[ade_pattern_name(*row.ade)];
        }
        if (ar_ng && !matched)
            report.only_ng.push_back({row.key, "almost reduced + NG but matches no pattern"});
        if (matched && !ar_ng)
            report.only_pattern.push_back({row.key, "pattern match that is not almost reduced + NG"});
    });
    return report;
}

/// One nearly Gorenstein quotient found by the table reproduction.
struct DingHit {
    int item = 0;
    long long k = -1, s = -1;
    std::string display;
};

/// Reproduction of the nearly Gorenstein quotient classification: enumerate
/// all central-weight-2 stars with platonic branch orders and all coprime
/// fractions (the third order runs far enough to cover the requested family
/// window), plus central-weight-3 probes. The nearly Gorenstein ones must be
/// exactly the family instances and the ten sporadic rows; family instances
/// beyond the requested window are counted separately (the family is
/// infinite, so any finite enumeration sees a few past the window).
struct DingReport {
    int k_max = 0, s_max = 0;
    long enumerated = 0;
    long gorenstein_skipped = 0;
    long probes = 0;
    long formula_checks = 0;
    std::vector<DingHit> family_hits;          // within the (k,s) window
    long family_beyond_window = 0;
    std::vector<DingHit> sporadic_hits;        // items 2..11, expected once each
    std::vector<ReproMismatch> unexpected_ng;  // NG but not in the table
    std::vector<ReproMismatch> missing;        // expected but not NG / not found
    std::vector<ReproMismatch> probe_failures; // central weight >= 3 yet NG
    bool item5_found = false;

    bool ok() const {
        return unexpected_ng.empty() && missing.empty() && probe_failures.empty();
    }
};

inline DingReport reproduce_ding(int k_max, int s_max) {
    DingReport report;
    report.k_max = k_max;
    report.s_max = s_max;
    if (k_max < 0 || s_max < 3)
        throw Error(ErrorCode::OutOfRange, "family window needs k_max >= 0 and s_max >= 3");

    const long long q3_limit = static_cast<long long>(k_max + 1) * s_max - k_max;

    // all platonic order triples within the window
    std::vector<std::array<long long, 3>> triples;
    for (long long n = 2; n <= q3_limit; ++n) triples.push_back({2, 2, n});
    triples.push_back({2, 3, 3});
    triples.push_back({2, 3, 4});
    triples.push_back({2, 3, 5});

    std::set<std::vector<std::pair<long long, long long>>> seen;
    std::set<std::pair<long long, long long>> family_found;
    std::map<int, long> sporadic_found;

    for (const auto& triple : triples) {
        std::vector<std::vector<long long>> coprimes(3);
        for (int i = 0; i < 3; ++i)
            for (long long p = 1; p < triple[i]; ++p)
                if (std::gcd(triple[i], p) == 1) coprimes[i].push_back(p);
        for (long long p1 : coprimes[0])
            for (long long p2 : coprimes[1])
                for (long long p3 : coprimes[2]) {
                    std::vector<std::pair<long long, long long>> fractions{
                        {triple[0], p1}, {triple[1], p2}, {triple[2], p3}};
                    std::sort(fractions.begin(), fractions.end());
                    if (!seen.insert(fractions).second) continue;

                    std::vector<std::pair<Int, Int>> branches;
                    for (auto [q, p] : fractions) branches.emplace_back(q, p);
                    WeightedDualGraph g = graph_from_pd(2, branches);
                    ++report.enumerated;

                    NGReport ng = nearly_gorenstein(g);
                    std::string display = pd_divisor(g).display;

                    if (ng.gorenstein) {
                        ++report.gorenstein_skipped;
                    } else {
                        ++report.formula_checks;
                        end_curve_colength(g);  // throws FormulaMismatch on failure
                        DingMatch match = match_ding(g);
                        if (ng.nearly_gorenstein) {
                            if (match.item == 0) {
                                report.unexpected_ng.push_back({canonical_key(g), display});
                            } else if (match.item == 1) {
                                if (match.k <= k_max && match.s <= s_max) {
                                    family_found.emplace(match.k, match.s);
                                    report.family_hits.push_back(
                                        {1, match.k, match.s, display});
                                } else {
                                    ++report.family_beyond_window;
                                }
                            } else {
                                ++sporadic_found[match.item];
                                report.sporadic_hits.push_back({match.item, -1, -1, display});
                                if (match.item == 5) report.item5_found = true;
                            }
                        } else if (match.item != 0) {
                            report.missing.push_back(
                                {canonical_key(g), "table row is not nearly Gorenstein: " + display});
                        }
                    }

                    // central weight 3 probe: never nearly Gorenstein
                    WeightedDualGraph probe = graph_from_pd(3, branches);
                    ++report.probes;
                    NGReport png = nearly_gorenstein(probe);
                    if (png.nearly_gorenstein)
                        report.probe_failures.push_back(
                            {canonical_key(probe), "central weight 3 star is NG: " + display});
                    if (!png.gorenstein) {
                        ++report.formula_checks;
                        end_curve_colength(probe);
                    }
                }
    }

    for (long long k = 0; k <= k_max; ++k)
        for (long long s = 3; s <= s_max; ++s)
            if (!family_found.count({k, s}))
                report.missing.push_back(
                    {"", "family instance k=" + std::to_string(k) + ", s=" + std::to_string(s) +
                             " was not detected as nearly Gorenstein"});
    for (int item = 2; item <= 11; ++item) {
        long hits = sporadic_found.count(item) ? sporadic_found[item] : 0;
        if (hits != 1)
            report.missing.push_back(
                {"", "sporadic item " + std::to_string(item) + " hit " + std::to_string(hits) +
                         " times (expected exactly once)"});
    }

    std::sort(report.family_hits.begin(), report.family_hits.end(),
              [](const DingHit& a, const DingHit& b) {
                  return std::make_pair(a.k, a.s) < std::make_pair(b.k, b.s);
              });
    std::sort(report.sporadic_hits.begin(), report.sporadic_hits.end(),
              [](const DingHit& a, const DingHit& b) { return a.item < b.item; });
    return report;
}

}  // namespace resgraph
