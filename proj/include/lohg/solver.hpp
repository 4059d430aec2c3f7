#pragma once

#include <cstdint>
#include <vector>

#include "lohg/hypergraph.hpp"

namespace lohg {

enum class ProgressKind { Type1, Type2 };

enum class Branch { Sparse, Dense, DenseFallback, Degenerate };

// One round of progress: an independent set that receives a large colour
// (Type1), or a set meeting every active edge in 0 or 2 slots that receives
// a small colour (Type2).
struct ProgressStep {
    ProgressKind kind = ProgressKind::Type1;
    std::vector<Vertex> vertices;
    Branch branch = Branch::Sparse;
    std::size_t n_active = 0;
    std::size_t m_active = 0;
    int colour = 0; // provisional colour assigned by the driver
};

// Delta(n) = n^(1/3) * (ln n)^(2/3) * max(ln ln n, 1)^(-2/3), clamped to >= 1.
double delta_threshold(std::size_t n_active);

// A view of the still-uncoloured part of a linear hypergraph: `vertices`
// lists the active vertex ids, `edges` indexes into h.edge_data (edges whose
// slots are all active).
struct ActiveView {
    const Hypergraph* h = nullptr;
    std::vector<Vertex> vertices;
    std::vector<std::uint32_t> edges;
};

// Sparse branch: keep vertices of degree <= 2 * average, build the primal
// graph of the induced sub-hypergraph, run best_is, then filter the result
// so it is independent in the whole active hypergraph and occupies at most
// one slot of every active edge.
ProgressStep sparse_progress(const ActiveView& view, double delta);
ProgressStep sparse_progress(const Hypergraph& h, double delta);

// Dense branch: the even-support set of the active edges (may be empty; the
// driver then falls back to the sparse branch).
ProgressStep dense_progress(const ActiveView& view);
ProgressStep dense_progress(const Hypergraph& h);

struct SolveResult {
    Colouring colouring;           // on the original hypergraph
    int colours_used = 0;
    int steps_type1 = 0;
    int steps_type2 = 0;
    int branch_sparse = 0;
    int branch_dense = 0;
    int branch_fallback = 0;
    int branch_degenerate = 0;
    std::size_t vertices_after_linearise = 0;
    std::vector<ProgressStep> steps; // in execution order, on linearised ids
};

// The whole pipeline: linearise once, then loop sparse/dense progress with a
// two-ended colour counter (Type1 takes the next large colour, Type2 the
// next small one), finish leftovers with one mid colour, compact, lift back
// and re-verify. Throws PromiseViolation instead of ever returning an
// invalid colouring.
SolveResult lo_colour(const Hypergraph& h);

} // namespace lohg
