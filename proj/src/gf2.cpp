#include "lohg/gf2.hpp"

#include <algorithm>

namespace lohg {

int BitVec::lowest_set() const {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w[i]));
    return -1;
}

Gf2System build_system(const Hypergraph& h) {
    if (h.r != 3) throw std::invalid_argument("build_system requires a 3-uniform hypergraph");
    Gf2System sys;
    sys.n_vars = h.n;
    const std::size_t m = h.edge_count();
    sys.rows.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto e = h.edge(i);
        BitVec row(h.n);
        for (Vertex v : e) row.flip(v); // duplicated vertices cancel mod 2
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

namespace {

// Gauss-Jordan: pivot rows kept fully reduced, so a 3-sparse incoming row
// needs at most popcount-many pivot XORs before it settles.
struct Rref {
    int n = 0;
    std::vector<BitVec> rows;     // reduced pivot rows
    std::vector<int> pivot_col;   // per stored row
    std::vector<int> col_to_row;  // column -> stored row index or -1

    explicit Rref(int n_vars) : n(n_vars), col_to_row(n_vars, -1) {}

    void insert(BitVec v) {
        // clear every pivot-column bit of v; since stored rows are in reduced
        // form, each XOR only introduces free-column bits, which need no work
        for (std::size_t wi = 0; wi < v.w.size(); ++wi) {
            std::uint64_t pending = v.w[wi];
            while (pending) {
                const int b = __builtin_ctzll(pending);
                pending &= pending - 1;
                const int c = static_cast<int>(wi * 64 + b);
                if (!v.get(c)) continue; // cleared by an earlier XOR
                const int row = col_to_row[c];
                if (row >= 0) v ^= rows[row];
            }
        }
        const int c = v.lowest_set();
        if (c < 0) return; // dependent
        // new pivot at a free column: clear it from the existing rows
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].get(c)) rows[i] ^= v;
        col_to_row[c] = static_cast<int>(rows.size());
        rows.push_back(std::move(v));
        pivot_col.push_back(c);
    }
};

} // namespace

KernelBasis kernel(const Gf2System& sys) {
    Rref rref(sys.n_vars);
    for (const auto& row : sys.rows) rref.insert(row);

    KernelBasis kb;
    kb.n_vars = sys.n_vars;
    kb.pivot_cols = rref.pivot_col;
    std::sort(kb.pivot_cols.begin(), kb.pivot_cols.end());
    std::vector<char> is_pivot(sys.n_vars, 0);
    for (int c : rref.pivot_col) is_pivot[c] = 1;
    for (int c = 0; c < sys.n_vars; ++c)
        if (!is_pivot[c]) kb.free_cols.push_back(c);

    kb.basis.reserve(kb.free_cols.size());
    for (int f : kb.free_cols) {
        BitVec b(sys.n_vars);
        b.set(f);
        // x_pivot = sum of the pivot row's free-column entries
        for (std::size_t i = 0; i < rref.rows.size(); ++i)
            if (rref.rows[i].get(f)) b.set(rref.pivot_col[i]);
        kb.basis.push_back(std::move(b));
    }
    return kb;
}

bool satisfies(const Gf2System& sys, const BitVec& x) {
    for (const auto& row : sys.rows) {
        int parity = 0;
        for (std::size_t i = 0; i < row.w.size(); ++i)
            parity ^= __builtin_popcountll(row.w[i] & x.w[i]) & 1;
        if (parity) return false;
    }
    return true;
}

BitVec max_ones_approx(const Gf2System& sys) {
    KernelBasis kb = kernel(sys);
    const int n = sys.n_vars;
    const int d = kb.dim();

    // last[j] = index of the last basis vector touching coordinate j;
    // coordinate j becomes constant right after that free variable is fixed.
    std::vector<int> last(n, -1);
    for (int i = 0; i < d; ++i) {
        const BitVec& b = kb.basis[i];
        for (std::size_t wi = 0; wi < b.w.size(); ++wi) {
            std::uint64_t bits = b.w[wi];
            while (bits) {
                int j = static_cast<int>(wi * 64 + __builtin_ctzll(bits));
                bits &= bits - 1;
                last[j] = i;
            }
        }
    }
    std::vector<BitVec> group(d, BitVec(n));
    for (int j = 0; j < n; ++j)
        if (last[j] >= 0) group[last[j]].set(j);

    // method of conditional expectations: the two choices for free variable
    // i differ only on the coordinates that become constant now; pick the
    // value that fixes more of them to one (ties toward 1)
    BitVec acc(n);
    for (int i = 0; i < d; ++i) {
        const BitVec& g = group[i]; // nonempty: contains the free column itself
        int ones_if_zero = 0, ones_if_one = 0;
        for (std::size_t wi = 0; wi < g.w.size(); ++wi) {
            ones_if_zero += __builtin_popcountll(g.w[wi] & acc.w[wi]);
            ones_if_one += __builtin_popcountll(g.w[wi] & (acc.w[wi] ^ kb.basis[i].w[wi]));
        }
        if (ones_if_one >= ones_if_zero) acc ^= kb.basis[i];
    }
    return acc;
}

std::vector<Vertex> even_support_set(const Hypergraph& h) {
    Gf2System sys = build_system(h);
    BitVec x = max_ones_approx(sys);
    std::vector<Vertex> out;
    for (int v = 0; v < h.n; ++v)
        if (x.get(v)) out.push_back(static_cast<Vertex>(v));
    return out;
}

} // namespace lohg
