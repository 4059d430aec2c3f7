#pragma once

#include <cstdint>
#include <vector>

#include "lohg/hypergraph.hpp"

namespace lohg {

// Bit-packed vector over GF(2).
struct BitVec {
    int bits = 0;
    std::vector<std::uint64_t> w;

    BitVec() = default;
    explicit BitVec(int n) : bits(n), w((n + 63) / 64, 0) {}

    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    void flip(int i) { w[i >> 6] ^= 1ULL << (i & 63); }

    void operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    }

    int popcount() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }

    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }

    int lowest_set() const; // -1 when zero
    bool operator==(const BitVec& o) const { return bits == o.bits && w == o.w; }
};

// Homogeneous linear system over GF(2): one variable per vertex, rows are
// equation supports (right-hand sides implicitly zero).
struct Gf2System {
    int n_vars = 0;
    std::vector<BitVec> rows;
};

// Kernel of a system in free-variable parametrization: basis[i] is the
// solution with free column free_cols[i] set and the other free columns zero.
struct KernelBasis {
    int n_vars = 0;
    std::vector<BitVec> basis;
    std::vector<int> pivot_cols;
    std::vector<int> free_cols;

    int rank() const { return static_cast<int>(pivot_cols.size()); }
    int dim() const { return static_cast<int>(basis.size()); }
};

// One row per edge; duplicated vertices inside an edge cancel mod 2.
// Requires h.r == 3.
Gf2System build_system(const Hypergraph& h);

// Gauss-Jordan elimination, first-nonzero pivoting in column order.
KernelBasis kernel(const Gf2System& sys);

bool satisfies(const Gf2System& sys, const BitVec& x);

// Deterministic factor-2 approximation of Max-Ones over the solution space:
// assigns free variables one at a time by the method of conditional
// expectations (ties toward 1). The result satisfies every row and has
// weight >= ceil(F/2), where F is the number of coordinates not identically
// zero over the kernel.
BitVec max_ones_approx(const Gf2System& sys);

// Support of max_ones_approx(build_system(h)): a vertex set meeting every
// edge of h in 0 or 2 slots (with multiplicity). Sorted ascending.
std::vector<Vertex> even_support_set(const Hypergraph& h);

} // namespace lohg
