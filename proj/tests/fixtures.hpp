#pragma once

#include "resgraph/graph.hpp"

#include <string>
#include <vector>

namespace fixtures {

using resgraph::WeightedDualGraph;

/// Path graph v1 - v2 - ... - vn with the given weights.
inline WeightedDualGraph chain(const std::vector<long long>& weights) {
    std::vector<std::pair<std::string, long long>> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        vs.emplace_back("v" + std::to_string(i + 1), weights[i]);
        if (i > 0) es.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
    }
    return WeightedDualGraph::build(vs, es);
}

/// Star with center e0 and one chain per arm, read center-outward.
inline WeightedDualGraph star(long long center,
                              const std::vector<std::vector<long long>>& arms) {
    std::vector<std::pair<std::string, long long>> vs{{"e0", center}};
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < arms.size(); ++i) {
        std::string prev = "e0";
        for (std::size_t j = 0; j < arms[i].size(); ++j) {
            std::string id = "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            vs.emplace_back(id, arms[i][j]);
            es.emplace_back(prev, id);
            prev = id;
        }
    }
    return WeightedDualGraph::build(vs, es);
}

/// Center of the given weight with k leaves of weight 2.
inline WeightedDualGraph flower(long long center, int leaves) {
    std::vector<std::vector<long long>> arms(leaves, std::vector<long long>{2});
    return star(center, arms);
}

inline WeightedDualGraph rdp_A(int n) { return chain(std::vector<long long>(n, 2)); }

/// D_n rational double point, n >= 4: a (-2)-path of n-2 vertices with two
/// extra (-2)-leaves on its far end.
inline WeightedDualGraph rdp_D(int n) {
    std::vector<std::pair<std::string, long long>> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= n - 2; ++i) {
        vs.emplace_back("v" + std::to_string(i), 2);
        if (i > 1) es.emplace_back("v" + std::to_string(i - 1), "v" + std::to_string(i));
    }
    vs.emplace_back("u1", 2);
    vs.emplace_back("u2", 2);
    es.emplace_back("v" + std::to_string(n - 2), "u1");
    es.emplace_back("v" + std::to_string(n - 2), "u2");
    return WeightedDualGraph::build(vs, es);
}

/// E-type tree: a path p1..p(n-1) with one extra vertex q attached to
/// p(branch). All weights 2.
inline WeightedDualGraph rdp_E(int n) {
    int branch = (n == 6) ? 3 : (n == 7 ? 4 : 5);
    std::vector<std::pair<std::string, long long>> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= n - 1; ++i) {
        vs.emplace_back("p" + std::to_string(i), 2);
        if (i > 1) es.emplace_back("p" + std::to_string(i - 1), "p" + std::to_string(i));
    }
    vs.emplace_back("q", 2);
    es.emplace_back("p" + std::to_string(branch), "q");
    return WeightedDualGraph::build(vs, es);
}

/// Rational triple point of shape D_0: a 5-chain 3,2,2,2,2 with a (-2)-leaf
/// on the middle vertex.
inline WeightedDualGraph triple_point_d0() {
    return WeightedDualGraph::build(
        {{"v1", 3}, {"v2", 2}, {"v3", 2}, {"v4", 2}, {"v5", 2}, {"v6", 2}},
        {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}, {"v3", "v6"}});
}

/// Quotient singularity of multiplicity 4 whose canonical trace ideal is not
/// Ulrich: chain 2,3,2,3 with a (-2)-leaf on the third vertex.
inline WeightedDualGraph quotient_e4_not_ulrich() {
    return WeightedDualGraph::build(
        {{"v1", 2}, {"v2", 3}, {"v3", 2}, {"v4", 3}, {"v5", 2}},
        {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v3", "v5"}});
}

/// Triple point A_{l,m,n}: central (-3)-curve with three (-2)-arms.
inline WeightedDualGraph triple_point_A(int l, int m, int n) {
    return star(3, {std::vector<long long>(l, 2), std::vector<long long>(m, 2),
                    std::vector<long long>(n, 2)});
}

/// Graded star of multiplicity 4 with trace colength n: central (-3)-curve,
/// three arms of n-1 (-2)-curves, except the last curve of arm 3 is a -3.
inline WeightedDualGraph graded_star_colength(int n) {
    std::vector<long long> arm(n - 1, 2);
    std::vector<long long> arm3 = arm;
    arm3.back() = 3;
    return star(3, {arm, arm, arm3});
}

}  // namespace fixtures
