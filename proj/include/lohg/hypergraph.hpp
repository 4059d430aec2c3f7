#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lohg/graph.hpp"

namespace lohg {

using Vertex = std::uint32_t;

// Thrown when an input violates the LO-2-colourability promise in a way the
// algorithms can certify (e.g. linearisation derives a constant edge).
struct PromiseViolation : std::runtime_error {
    explicit PromiseViolation(const std::string& what) : std::runtime_error(what) {}
};

// r-uniform hypergraph on vertices 0..n-1. Edges are multisets stored as
// ascending r-tuples in a flat array; order of edges is preserved.
// Constant edges (all slots equal) are excluded.
struct Hypergraph {
    int r = 3;
    int n = 0;
    std::vector<Vertex> edge_data; // edge_count() * r entries

    Hypergraph() = default;
    Hypergraph(int uniformity, int vertices) : r(uniformity), n(vertices) {}
    Hypergraph(int uniformity, int vertices, const std::vector<std::vector<Vertex>>& edges);

    std::size_t edge_count() const { return r == 0 ? 0 : edge_data.size() / r; }

    std::span<const Vertex> edge(std::size_t i) const {
        return {edge_data.data() + i * r, static_cast<std::size_t>(r)};
    }

    // appends a sorted copy of the given tuple; throws on bad arity/range/constant edge
    void add_edge(std::span<const Vertex> tuple);

    // per-vertex degree: number of edges whose multiset contains the vertex
    // (counted once per edge)
    std::vector<std::uint32_t> degrees() const;
};

struct Colouring {
    int k = 1;
    std::vector<int> assignment; // values in [1, k]
};

// Union-find over original vertex ids recording the merges performed by
// linearise(), plus the representative -> new-id renumbering.
struct MergeMap {
    std::vector<Vertex> parent;   // size = original n
    std::vector<Vertex> renumber; // representative -> id in [0, n_new)
    int n_new = 0;

    Vertex find(Vertex v) const {
        while (parent[v] != v) v = parent[v];
        return v;
    }

    static MergeMap identity(int n);
};

struct LineariseResult {
    Hypergraph h;
    MergeMap map;
};

// True iff every edge's colour multiset has a unique maximum.
// Throws std::invalid_argument when the assignment length differs from h.n.
bool verify_lo_colouring(const Hypergraph& h, const Colouring& c);

// True iff no edge contains two distinct members of s.
// Throws std::invalid_argument on an out-of-range vertex.
bool is_independent_set(const Hypergraph& h, const std::vector<Vertex>& s);

// Replaces each hyperedge with a clique: {u,v} is an edge iff u != v
// co-occur in some hyperedge. No loops, no parallel edges.
Graph primal_graph(const Hypergraph& h);

// Repeatedly merges the two remaining vertices of any pair of edges that
// share >= 2 slots as multisets, until the hypergraph is linear. Duplicate
// edges collapse. Requires r == 3. Throws PromiseViolation when a merge chain
// makes an edge constant (the input was not LO-2-colourable).
LineariseResult linearise(const Hypergraph& h);

// Pulls a colouring of the linearised hypergraph back to the original one:
// c(v) = c'(renumber(find(v))).
Colouring lift_colouring(const MergeMap& mm, const Colouring& linearised);

} // namespace lohg
