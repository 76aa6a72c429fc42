#pragma once

#include "resgraph/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace resgraph {
namespace detail {

/// AHU-style encoding of a rooted weighted tree given by adjacency lists.
inline std::string ahu_encode(const std::vector<std::vector<int>>& adj,
                              const std::vector<long long>& weights, int root, int parent) {
    std::vector<std::string> child_codes;
    for (int c : adj[root])
        if (c != parent) child_codes.push_back(ahu_encode(adj, weights, c, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(" + std::to_string(weights[root]);
    for (const std::string& s : child_codes) code += s;
    code += ")";
    return code;
}

inline std::vector<int> tree_centroids(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> size(n, 0), order, parent(n, -1);
    order.reserve(n);
    order.push_back(0);
    for (std::size_t h = 0; h < order.size(); ++h)
        for (int c : adj[order[h]])
            if (c != parent[order[h]]) {
                parent[c] = order[h];
                order.push_back(c);
            }
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        size[v] += 1;
        if (parent[v] >= 0) size[parent[v]] += size[v];
    }
    std::vector<int> centroids;
    for (int v = 0; v < n; ++v) {
        int heaviest = n - size[v];
        for (int c : adj[v])
            if (c != parent[v]) heaviest = std::max(heaviest, size[c]);
        if (heaviest <= n / 2) centroids.push_back(v);
    }
    return centroids;
}

inline std::string tree_canonical_key(const std::vector<std::vector<int>>& adj,
                                      const std::vector<long long>& weights) {
    std::string best;
    for (int c : tree_centroids(adj)) {
        std::string code = ahu_encode(adj, weights, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

/// Minimal adjacency encoding over all vertex orders that sort by
/// (weight, degree) class. Exponential in the worst case; meant for the
/// small graphs the cyclic-graph mode handles.
struct GeneralCanonical {
    const WeightedDualGraph& g;
    int n;
    std::vector<int> classes;       // class index per vertex, classes pre-sorted
    std::vector<int> perm, pos;     // perm[slot] = vertex, pos[vertex] = slot
    std::string best;

    explicit GeneralCanonical(const WeightedDualGraph& graph) : g(graph), n(graph.size()) {
        std::vector<std::pair<long long, int>> sig(n);
        for (int i = 0; i < n; ++i) sig[i] = {g.weight(i), g.degree(i)};
        std::vector<std::pair<long long, int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        classes.resize(n);
        for (int i = 0; i < n; ++i)
            classes[i] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
        perm.assign(n, -1);
        pos.assign(n, -1);
        class_of_slot.resize(n);
        std::vector<int> sorted_by_class(n);
        for (int i = 0; i < n; ++i) sorted_by_class[i] = i;
        std::stable_sort(sorted_by_class.begin(), sorted_by_class.end(),
                         [&](int a, int b) { return classes[a] < classes[b]; });
        for (int slot = 0; slot < n; ++slot) class_of_slot[slot] = classes[sorted_by_class[slot]];
    }

    std::vector<int> class_of_slot;

    std::string run() {
        std::string partial;
        extend(0, partial);
        std::string head;
        for (int slot = 0; slot < n; ++slot)
            head += "w" + std::to_string(slot_weight(slot)) + ";";
        return head + best;
    }

private:
    long long slot_weight(int slot) const {
        for (int v = 0; v < n; ++v)
            if (classes[v] == class_of_slot[slot]) return g.weight(v);
        return 0;
    }

    void extend(int slot, std::string& partial) {
        if (slot == n) {
            if (best.empty() || partial < best) best = partial;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (pos[v] >= 0 || classes[v] != class_of_slot[slot]) continue;
            std::string row;
            row.reserve(slot);
            for (int s = 0; s < slot; ++s) row += g.has_edge(v, perm[s]) ? '1' : '0';
            std::string next = partial + row + "|";
            if (!best.empty() && next.compare(0, next.size(), best, 0, next.size()) > 0) continue;
            perm[slot] = v;
            pos[v] = slot;
            extend(slot + 1, next);
            pos[v] = -1;
            perm[slot] = -1;
        }
    }
};

}  // namespace detail

/// Canonical key of a weighted graph: equal keys exactly for isomorphic
/// weighted graphs. Trees use centroid-rooted AHU encodings; general graphs
/// fall back to a minimal-adjacency search.
inline std::string canonical_key(const WeightedDualGraph& g) {
    if (g.is_tree()) {
        std::vector<std::vector<int>> adj(g.size());
        for (int i = 0; i < g.size(); ++i) adj[i] = g.neighbors(i);
        std::vector<long long> weights(g.size());
        for (int i = 0; i < g.size(); ++i) weights[i] = g.weight(i);
        return "T" + detail::tree_canonical_key(adj, weights);
    }
    detail::GeneralCanonical gc(g);
    return "G" + gc.run();
}

}  // namespace resgraph
