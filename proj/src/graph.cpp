#include "lohg/graph.hpp"

#include <algorithm>

namespace lohg {

Graph graph_from_pairs(int n, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs) {
    Graph g(n);
    // radix pass: count directed entries, then scatter (keeps build linear)
    std::vector<std::uint32_t> cnt(n, 0);
    for (auto& [a, b] : pairs) {
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        ++cnt[a];
        ++cnt[b];
    }
    for (int v = 0; v < n; ++v) g.adj[v].reserve(cnt[v]);
    for (const auto& [a, b] : pairs) {
        if (a == b) continue;
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    for (auto& lst : g.adj) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    return g;
}

bool graph_independent(const Graph& g, const std::vector<std::uint32_t>& s) {
    std::vector<char> in_s(g.n, 0);
    for (auto v : s) in_s[v] = 1;
    for (auto v : s)
        for (auto u : g.adj[v])
            if (in_s[u]) return false;
    return true;
}

} // namespace lohg
