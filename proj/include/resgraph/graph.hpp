#pragma once

#include "resgraph/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace resgraph {

/// Weighted dual graph of a resolution: one vertex per exceptional curve
/// E_i, carrying the weight b_i = -E_i^2 >= 1; one edge per transverse
/// intersection point. Every curve has genus 0 (the model cannot express
/// anything else). Immutable after construction; connected, simple, no
/// self-loops. Vertex order is the input order and is preserved by every
/// algorithm in the library.
class WeightedDualGraph {
public:
    struct Vertex {
        std::string id;
        long long weight;  // b = -E^2
    };

    static WeightedDualGraph build(
        const std::vector<std::pair<std::string, long long>>& vertices,
        const std::vector<std::pair<std::string, std::string>>& edges) {
        if (vertices.empty())
            throw Error(ErrorCode::OutOfRange, "graph needs at least one vertex");

        WeightedDualGraph g;
        std::map<std::string, int> index;
        for (const auto& [id, weight] : vertices) {
            if (index.count(id))
                throw Error(ErrorCode::DuplicateVertex, "vertex '" + id + "' declared twice");
            if (weight < 1)
                throw Error(ErrorCode::NonPositiveWeight,
                            "vertex '" + id + "' has weight " + std::to_string(weight) +
                                "; the self-intersection -b must be negative");
            index.emplace(id, static_cast<int>(g.vertices_.size()));
            g.vertices_.push_back({id, weight});
        }

        g.adjacency_.resize(g.vertices_.size());
        std::set<std::pair<int, int>> seen;
        for (const auto& [a, b] : edges) {
            auto ia = index.find(a);
            auto ib = index.find(b);
            if (ia == index.end())
                throw Error(ErrorCode::UnknownEndpoint, "edge endpoint '" + a + "' is not a vertex");
            if (ib == index.end())
                throw Error(ErrorCode::UnknownEndpoint, "edge endpoint '" + b + "' is not a vertex");
            int u = ia->second, v = ib->second;
            if (u == v)
                throw Error(ErrorCode::SelfLoop, "self-loop at vertex '" + a + "'");
            auto key = std::minmax(u, v);
            if (!seen.insert(key).second)
                throw Error(ErrorCode::DuplicateEdge, "edge {" + a + ", " + b + "} repeated");
            g.edges_.push_back(key);
            g.adjacency_[u].push_back(v);
            g.adjacency_[v].push_back(u);
        }
        for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
        std::sort(g.edges_.begin(), g.edges_.end());

        // connectivity
        std::vector<char> reached(g.vertices_.size(), 0);
        std::vector<int> stack{0};
        reached[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adjacency_[v])
                if (!reached[w]) {
                    reached[w] = 1;
                    stack.push_back(w);
                }
        }
        for (std::size_t i = 0; i < reached.size(); ++i)
            if (!reached[i])
                throw Error(ErrorCode::Disconnected,
                            "vertex '" + g.vertices_[i].id + "' is not reachable from '" +
                                g.vertices_[0].id + "'");
        return g;
    }

    int size() const { return static_cast<int>(vertices_.size()); }
    const Vertex& vertex(int i) const { return vertices_[i]; }
    long long weight(int i) const { return vertices_[i].weight; }
    const std::string& id(int i) const { return vertices_[i].id; }
    const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }
    int degree(int i) const { return static_cast<int>(adjacency_[i].size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int index_of(const std::string& id) const {
        for (int i = 0; i < size(); ++i)
            if (vertices_[i].id == id) return i;
        throw Error(ErrorCode::UnknownEndpoint, "no vertex named '" + id + "'");
    }

    bool has_edge(int u, int v) const {
        const auto& nbrs = adjacency_[u];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    /// Connected with n-1 edges, i.e. acyclic.
    bool is_tree() const { return edges_.size() + 1 == vertices_.size(); }

    /// Copy with vertices renumbered so that new position i holds old vertex
    /// perm[i]. Used by the order-independence property tests.
    WeightedDualGraph permuted(const std::vector<int>& perm) const {
        std::vector<std::pair<std::string, long long>> vs;
        vs.reserve(vertices_.size());
        for (int old : perm) vs.emplace_back(vertices_[old].id, vertices_[old].weight);
        std::vector<std::pair<std::string, std::string>> es;
        es.reserve(edges_.size());
        for (auto [u, v] : edges_) es.emplace_back(vertices_[u].id, vertices_[v].id);
        return build(vs, es);
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<std::pair<int, int>> edges_;  // index pairs, first < second, sorted
    std::vector<std::vector<int>> adjacency_;
};

/// Convenience constructor matching the library's documented input form.
inline WeightedDualGraph build_graph(
    const std::vector<std::pair<std::string, long long>>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
    return WeightedDualGraph::build(vertices, edges);
}

}  // namespace resgraph
