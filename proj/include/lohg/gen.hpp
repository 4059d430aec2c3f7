#pragma once

#include <cstdint>
#include <stdexcept>

#include "lohg/hypergraph.hpp"

namespace lohg {

struct InfeasibleSpec : std::runtime_error {
    explicit InfeasibleSpec(const std::string& what) : std::runtime_error(what) {}
};

// Seeded generator of planted LO-2-colourable 3-uniform instances.
struct GenSpec {
    int n = 0;
    std::size_t m = 0;
    double frac2 = 0.5;          // fraction of vertices planted with colour 2
    bool linear = false;         // enforce pairwise multiset overlap <= 1
    bool allow_degenerate = false; // allow edges (a,a,t) with a = b
    std::uint64_t seed = 0;
};

struct PlantedInstance {
    Hypergraph h;
    Colouring witness; // k = 2, exactly one colour-2 vertex per edge
};

// Edges are sampled as (a, b, t): a, b from the colour-1 set, t from the
// planted colour-2 set. Pure function of spec.seed. Linearity is enforced by
// rejection with a cap of 100*m attempts; an exhausted cap or an impossible
// spec raises InfeasibleSpec.
PlantedInstance gen_planted(const GenSpec& spec);

// m = floor(n*delta/4), non-linear sampling allowed
PlantedInstance gen_sparse(int n, double delta, std::uint64_t seed);

// m = ceil(4*n*delta), linear
PlantedInstance gen_dense(int n, double delta, std::uint64_t seed);

} // namespace lohg
