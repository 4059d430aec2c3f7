#pragma once

#include <cstdint>
#include <vector>

namespace lohg {

// Simple undirected graph: symmetric adjacency, no loops, no duplicates,
// neighbour lists sorted ascending.
struct Graph {
    int n = 0;
    std::vector<std::vector<std::uint32_t>> adj;

    Graph() = default;
    explicit Graph(int n_vertices) : n(n_vertices), adj(n_vertices) {}

    std::size_t edge_count() const {
        std::size_t s = 0;
        for (const auto& a : adj) s += a.size();
        return s / 2;
    }

    std::size_t degree(std::uint32_t v) const { return adj[v].size(); }

    double average_degree() const {
        if (n == 0) return 0.0;
        return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(n);
    }
};

// Builds a graph from a pair list; loops dropped, duplicates merged.
Graph graph_from_pairs(int n, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs);

// True iff no edge of g joins two members of s.
bool graph_independent(const Graph& g, const std::vector<std::uint32_t>& s);

} // namespace lohg
