#pragma once

#include "resgraph/canonical.hpp"
#include "resgraph/classify.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/quotient.hpp"

#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace resgraph {

namespace detail {

using EdgeList = std::vector<std::pair<int, int>>;

/// Free trees on n vertices up to isomorphism, one representative edge list
/// each, grown by leaf extension and deduplicated by canonical form.
inline const std::vector<EdgeList>& free_trees(int n) {
    static std::mutex lock;
    static std::vector<std::vector<EdgeList>> cache{{}, {EdgeList{}}};
    std::scoped_lock guard(lock);
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        std::vector<EdgeList> next;
        std::unordered_set<std::string> seen;
        for (const EdgeList& tree : cache[m - 1]) {
            for (int attach = 0; attach < m - 1; ++attach) {
                EdgeList extended = tree;
                extended.emplace_back(attach, m - 1);
                std::vector<std::vector<int>> adj(m);
                for (auto [u, v] : extended) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
                std::string key =
                    tree_canonical_key(adj, std::vector<long long>(m, 2));
                if (seen.insert(key).second) next.push_back(std::move(extended));
            }
        }
        cache.push_back(std::move(next));
    }
    return cache[n];
}

/// Connected simple graphs on n vertices up to isomorphism; exponential,
/// intended for small n only.
inline std::vector<EdgeList> connected_graphs(int n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all_edges.emplace_back(i, j);
    const int m = static_cast<int>(all_edges.size());

    std::vector<EdgeList> out;
    std::unordered_set<std::string> seen;
    for (long mask = 0; mask < (1L << m); ++mask) {
        EdgeList edges;
        for (int b = 0; b < m; ++b)
            if (mask & (1L << b)) edges.push_back(all_edges[b]);
        if (static_cast<int>(edges.size()) < n - 1) continue;
        // connectivity via union-find
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int components = n;
        for (auto [u, v] : edges)
            if (find(u) != find(v)) {
                parent[find(u)] = find(v);
                --components;
            }
        if (components != 1) continue;

        std::vector<std::pair<std::string, long long>> vs;
        for (int i = 0; i < n; ++i) vs.emplace_back("v" + std::to_string(i), 2);
        std::vector<std::pair<std::string, std::string>> es;
        for (auto [u, v] : edges)
            es.emplace_back("v" + std::to_string(u), "v" + std::to_string(v));
        auto g = WeightedDualGraph::build(vs, es);
        if (seen.insert(canonical_key(g)).second) out.push_back(std::move(edges));
    }
    return out;
}

}  // namespace detail

struct CensusRow {
    std::string key;
    int n = 0;
    std::vector<long long> weights;         // sorted multiset
    detail::EdgeList edges;                 // representative labeling
    std::vector<long long> vertex_weights;  // weights of the representative
    bool negative_definite = false;
    bool minimal = false;
    bool chain = false;
    std::optional<bool> rational;
    std::optional<bool> gorenstein;
    std::optional<bool> nearly_gorenstein;
    std::optional<bool> almost_reduced;
    std::optional<bool> log_terminal;
    std::optional<Int> e;
    std::optional<Int> trace_colength;
    std::optional<ADEPattern> ade;
    DingMatch ding;
};

/// Which analyses an enumeration run performs per graph. The flags are the
/// "predicate set" of the census: reproduction runs switch off what they do
/// not need (the discrepancy solve dominates the cost).
struct CensusOptions {
    int max_vertices = 5;
    int max_weight = 3;
    bool trees_only = true;
    bool analyze_log_terminal = true;
    bool analyze_table = true;
    int tree_cap = 9;
    int graph_cap = 6;
    std::function<bool(const CensusRow&)> filter;  // emit only matching rows
};

namespace detail {

inline CensusRow classify_row(const WeightedDualGraph& g, const CensusOptions& opt,
                              std::string key) {
    CensusRow row;
    row.key = std::move(key);
    row.n = g.size();
    for (int i = 0; i < g.size(); ++i) row.vertex_weights.push_back(g.weight(i));
    row.weights = row.vertex_weights;
    std::sort(row.weights.begin(), row.weights.end());
    row.edges = g.edges();

    IntersectionForm m = intersection_form(g);
    row.negative_definite = is_negative_definite(m);
    row.minimal = is_minimal_resolution(g);
    row.chain = is_chain(g);
    if (!row.negative_definite) return row;

    auto [zf, seq] = fundamental(m);
    bool rational = true;
    for (const auto& step : seq.steps)
        if (step.value > 1) rational = false;
    CanonicalNumerics k = canonical_intersections(g);
    if (rational != (chi_value(m, k.k, zf) == 1))
        throw Error(ErrorCode::InternalDisagreement,
                    "step-value test and fundamental genus disagree on rationality");
    row.rational = rational;

    if (rational && row.minimal) {
        NGCore core = ng_core(g, m, k.k, zf);
        row.gorenstein = core.gorenstein;
        row.nearly_gorenstein = core.ng;
        row.e = core.e;
        row.trace_colength = core.trace_colength;
        bool ar = true;
        for (int i = 0; i < g.size(); ++i)
            if (g.weight(i) >= 3 && zf[i] != 1) ar = false;
        row.almost_reduced = ar;
        row.ade = ade_core(g, zf).pattern;
    }

    if (row.minimal && opt.analyze_log_terminal) {
        std::optional<SeifertData> sd;
        if (!row.chain) sd = star_or_none(g);
        row.log_terminal = log_terminal_core(g, m, sd);
        if (*row.log_terminal && !row.chain && row.gorenstein && !*row.gorenstein) {
            if (opt.analyze_table) row.ding = ding_lookup(*sd);
            // end-curve colength identity, checked on every quotient row
            Int formula = *row.e - 1;
            for (int i = 0; i < g.size(); ++i)
                if (g.degree(i) == 1) formula -= Int(g.weight(i)) - 2;
            if (formula != *row.trace_colength)
                throw Error(ErrorCode::FormulaMismatch,
                            "end-curve colength formula fails on a quotient row");
        }
    }
    return row;
}

}  // namespace detail

/// Stream every weighted graph within the bounds, up to isomorphism, as a
/// classified census row. Trees only by default; the cyclic-graph mode
/// enumerates all connected simple graphs and is exponential (small caps).
/// Output order is deterministic: shapes in generation order, weight
/// assignments lexicographically, first occurrence of each canonical key.
inline void enumerate_graphs(const CensusOptions& opt,
                             const std::function<void(const CensusRow&)>& sink) {
    const int cap = opt.trees_only ? opt.tree_cap : opt.graph_cap;
    if (opt.max_vertices < 1 || opt.max_vertices > cap)
        throw Error(ErrorCode::CapExceeded,
                    "max_vertices " + std::to_string(opt.max_vertices) + " exceeds the cap " +
                        std::to_string(cap));
    if (opt.max_weight < 2)
        throw Error(ErrorCode::OutOfRange, "max_weight must be at least 2");

    for (int n = 1; n <= opt.max_vertices; ++n) {
        std::vector<detail::EdgeList> shapes =
            opt.trees_only ? detail::free_trees(n) : detail::connected_graphs(n);
        for (const detail::EdgeList& edges : shapes) {
            std::unordered_set<std::string> seen;
            std::vector<long long> weights(n, 2);
            for (;;) {
                std::vector<std::pair<std::string, long long>> vs;
                for (int i = 0; i < n; ++i) vs.emplace_back("v" + std::to_string(i), weights[i]);
                std::vector<std::pair<std::string, std::string>> es;
                for (auto [u, v] : edges)
                    es.emplace_back("v" + std::to_string(u), "v" + std::to_string(v));
                auto g = WeightedDualGraph::build(vs, es);
                std::string key = canonical_key(g);
                if (seen.insert(key).second) {
                    CensusRow row = detail::classify_row(g, opt, std::move(key));
                    if (!opt.filter || opt.filter(row)) sink(row);
                }
                int d = 0;
                while (d < n && weights[d] == opt.max_weight) weights[d++] = 2;
                if (d == n) break;
                ++weights[d];
            }
        }
    }
}

}  // namespace resgraph
