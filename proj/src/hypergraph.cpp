#include "lohg/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_map>

namespace lohg {

Hypergraph::Hypergraph(int uniformity, int vertices,
                       const std::vector<std::vector<Vertex>>& edges)
    : r(uniformity), n(vertices) {
    edge_data.reserve(edges.size() * r);
    for (const auto& e : edges) add_edge(e);
}

void Hypergraph::add_edge(std::span<const Vertex> tuple) {
    if (static_cast<int>(tuple.size()) != r)
        throw std::invalid_argument("edge arity does not match uniformity");
    std::vector<Vertex> e(tuple.begin(), tuple.end());
    std::sort(e.begin(), e.end());
    if (e.back() >= static_cast<Vertex>(n))
        throw std::invalid_argument("edge vertex out of range");
    if (e.front() == e.back())
        throw std::invalid_argument("constant edges are forbidden");
    edge_data.insert(edge_data.end(), e.begin(), e.end());
}

std::vector<std::uint32_t> Hypergraph::degrees() const {
    std::vector<std::uint32_t> deg(n, 0);
    const std::size_t m = edge_count();
    for (std::size_t i = 0; i < m; ++i) {
        auto e = edge(i);
        for (int j = 0; j < r; ++j)
            if (j == 0 || e[j] != e[j - 1]) ++deg[e[j]]; // once per edge
    }
    return deg;
}

MergeMap MergeMap::identity(int n) {
    MergeMap mm;
    mm.parent.resize(n);
    mm.renumber.resize(n);
    for (int v = 0; v < n; ++v) mm.parent[v] = mm.renumber[v] = static_cast<Vertex>(v);
    mm.n_new = n;
    return mm;
}

bool verify_lo_colouring(const Hypergraph& h, const Colouring& c) {
    if (static_cast<int>(c.assignment.size()) != h.n)
        throw std::invalid_argument("colouring length does not match vertex count");
    const std::size_t m = h.edge_count();
    for (std::size_t i = 0; i < m; ++i) {
        auto e = h.edge(i);
        int best = 0, cnt = 0;
        for (Vertex v : e) {
            int col = c.assignment[v];
            if (col > best) {
                best = col;
                cnt = 1;
            } else if (col == best) {
                ++cnt;
            }
        }
        if (cnt != 1) return false;
    }
    return true;
}

bool is_independent_set(const Hypergraph& h, const std::vector<Vertex>& s) {
    std::vector<char> in_s(h.n, 0);
    for (Vertex v : s) {
        if (v >= static_cast<Vertex>(h.n))
            throw std::invalid_argument("independent-set vertex out of range");
        in_s[v] = 1;
    }
    const std::size_t m = h.edge_count();
    for (std::size_t i = 0; i < m; ++i) {
        auto e = h.edge(i);
        Vertex hit = 0;
        int distinct = 0;
        for (int j = 0; j < h.r; ++j) {
            if (!in_s[e[j]]) continue;
            if (distinct == 0 || e[j] != hit) {
                hit = e[j];
                ++distinct;
            }
            if (distinct >= 2) return false;
        }
    }
    return true;
}

Graph primal_graph(const Hypergraph& h) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(h.edge_count() * h.r * (h.r - 1) / 2);
    const std::size_t m = h.edge_count();
    for (std::size_t i = 0; i < m; ++i) {
        auto e = h.edge(i);
        for (int a = 0; a < h.r; ++a)
            for (int b = a + 1; b < h.r; ++b)
                if (e[a] != e[b]) pairs.emplace_back(e[a], e[b]);
    }
    return graph_from_pairs(h.n, std::move(pairs));
}

namespace {

struct LineariseState {
    std::vector<Vertex> parent;

    Vertex find(Vertex v) {
        Vertex root = v;
        while (parent[root] != root) root = parent[root];
        while (parent[v] != root) {
            Vertex next = parent[v];
            parent[v] = root;
            v = next;
        }
        return root;
    }

    // keep the smaller id as representative so renumbering is reproducible
    bool unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

std::array<Vertex, 3> normalized(const Hypergraph& h, std::size_t i, LineariseState& uf) {
    auto e = h.edge(i);
    std::array<Vertex, 3> t{uf.find(e[0]), uf.find(e[1]), uf.find(e[2])};
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

LineariseResult linearise(const Hypergraph& h) {
    if (h.r != 3) throw std::invalid_argument("linearise requires a 3-uniform hypergraph");
    LineariseState uf;
    uf.parent.resize(h.n);
    for (int v = 0; v < h.n; ++v) uf.parent[v] = static_cast<Vertex>(v);

    const std::size_t m = h.edge_count();

    // Fixpoint sweeps: normalize every edge under the current merges, map
    // each slot pair to the remaining vertex, and merge whenever one pair
    // shows up with two different thirds. Merges applied mid-sweep leave
    // stale keys behind; the next sweep rebuilds the table and catches any
    // collisions they masked. Each sweep with a change performs at least one
    // real merge, so there are at most n sweeps. Deterministic: edges in
    // stored order, pairs within an edge in lexicographic slot order.
    std::unordered_map<std::uint64_t, Vertex> third_of;
    third_of.reserve(3 * m);
    bool changed = true;
    while (changed) {
        changed = false;
        third_of.clear();
        for (std::size_t i = 0; i < m; ++i) {
            auto t = normalized(h, i, uf);
            if (t[0] == t[2])
                throw PromiseViolation("linearisation produced a constant edge: "
                                       "input is not LO-2-colourable");
            const std::uint64_t keys[3] = {
                (std::uint64_t(t[0]) << 32) | t[1],
                (std::uint64_t(t[0]) << 32) | t[2],
                (std::uint64_t(t[1]) << 32) | t[2],
            };
            const Vertex thirds[3] = {t[2], t[1], t[0]};
            for (int j = 0; j < 3; ++j) {
                auto [it, fresh] = third_of.try_emplace(keys[j], thirds[j]);
                if (!fresh && uf.unite(it->second, thirds[j])) changed = true;
            }
        }
    }

    // renumber representatives in ascending id order
    MergeMap mm;
    for (int v = 0; v < h.n; ++v) uf.find(v); // compress paths for MergeMap::find
    mm.parent = uf.parent;
    mm.renumber.assign(h.n, 0);
    int next_id = 0;
    for (int v = 0; v < h.n; ++v)
        if (uf.find(v) == static_cast<Vertex>(v)) mm.renumber[v] = next_id++;
    mm.n_new = next_id;

    Hypergraph out(3, next_id);
    std::set<std::array<Vertex, 3>> seen;
    for (std::size_t i = 0; i < m; ++i) {
        auto t = normalized(h, i, uf);
        std::array<Vertex, 3> renamed{mm.renumber[t[0]], mm.renumber[t[1]], mm.renumber[t[2]]};
        std::sort(renamed.begin(), renamed.end());
        if (renamed[0] == renamed[2])
            throw PromiseViolation("linearisation produced a constant edge: "
                                   "input is not LO-2-colourable");
        if (seen.insert(renamed).second) out.add_edge(renamed);
    }
    return {std::move(out), std::move(mm)};
}

Colouring lift_colouring(const MergeMap& mm, const Colouring& linearised) {
    if (static_cast<int>(linearised.assignment.size()) != mm.n_new)
        throw std::invalid_argument("colouring does not match linearised vertex count");
    Colouring out;
    out.k = linearised.k;
    out.assignment.resize(mm.parent.size());
    for (std::size_t v = 0; v < mm.parent.size(); ++v)
        out.assignment[v] = linearised.assignment[mm.renumber[mm.find(static_cast<Vertex>(v))]];
    return out;
}

} // namespace lohg
