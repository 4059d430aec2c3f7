#include "lohg/solver.hpp"

#include <algorithm>
#include <cmath>

#include "lohg/gf2.hpp"
#include "lohg/indep_set.hpp"

namespace lohg {

double delta_threshold(std::size_t n_active) {
    if (n_active < 1) throw std::invalid_argument("delta_threshold: n >= 1 required");
    const double n = static_cast<double>(n_active);
    const double ln_n = std::log(n);
    const double lnln = ln_n > 0.0 ? std::log(ln_n) : 0.0;
    const double denom = std::max(lnln, 1.0);
    const double delta = std::cbrt(n) * std::pow(ln_n, 2.0 / 3.0) * std::pow(denom, -2.0 / 3.0);
    return std::max(delta, 1.0);
}

namespace {

ActiveView whole_view(const Hypergraph& h) {
    ActiveView view;
    view.h = &h;
    view.vertices.resize(h.n);
    for (int v = 0; v < h.n; ++v) view.vertices[v] = static_cast<Vertex>(v);
    view.edges.resize(h.edge_count());
    for (std::size_t i = 0; i < view.edges.size(); ++i)
        view.edges[i] = static_cast<std::uint32_t>(i);
    return view;
}

// slot-wise incidence lists restricted to the view's edges
struct ActiveIncidence {
    std::vector<std::uint32_t> off;
    std::vector<std::uint32_t> edge_ids;

    ActiveIncidence(const ActiveView& view) {
        const Hypergraph& h = *view.h;
        off.assign(h.n + 1, 0);
        for (std::uint32_t ei : view.edges)
            for (Vertex v : h.edge(ei)) ++off[v + 1];
        for (int v = 0; v < h.n; ++v) off[v + 1] += off[v];
        edge_ids.resize(off.back());
        std::vector<std::uint32_t> fill(off.begin(), off.end() - 1);
        for (std::uint32_t ei : view.edges)
            for (Vertex v : h.edge(ei)) edge_ids[fill[v]++] = ei;
    }
};

// true iff v fills two or three slots of edge ei
bool duplicated_in(const Hypergraph& h, std::uint32_t ei, Vertex v) {
    auto e = h.edge(ei);
    return (e[0] == v && e[1] == v) || (e[1] == v && e[2] == v);
}

} // namespace

ProgressStep sparse_progress(const ActiveView& view, double delta) {
    (void)delta; // the branch threshold is the caller's; the filter below is 2x average
    const Hypergraph& h = *view.h;
    ProgressStep step;
    step.kind = ProgressKind::Type1;
    step.branch = Branch::Sparse;
    step.n_active = view.vertices.size();
    step.m_active = view.edges.size();

    if (view.edges.empty()) {
        step.vertices = view.vertices;
        return step;
    }

    // degree filter: keep vertices of degree <= 2 * average degree
    std::vector<std::uint32_t> deg(h.n, 0);
    std::uint64_t deg_sum = 0;
    for (std::uint32_t ei : view.edges) {
        auto e = h.edge(ei);
        for (int j = 0; j < 3; ++j)
            if (j == 0 || e[j] != e[j - 1]) {
                ++deg[e[j]];
                ++deg_sum;
            }
    }
    const double avg = static_cast<double>(deg_sum) / static_cast<double>(view.vertices.size());
    const double cutoff = 2.0 * avg;

    std::vector<int> local_id(h.n, -1);
    std::vector<Vertex> kept;
    kept.reserve(view.vertices.size());
    for (Vertex v : view.vertices) {
        if (static_cast<double>(deg[v]) <= cutoff) {
            local_id[v] = static_cast<int>(kept.size());
            kept.push_back(v);
        }
    }

    // primal graph of the sub-hypergraph induced by the kept vertices
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t ei : view.edges) {
        auto e = h.edge(ei);
        if (local_id[e[0]] < 0 || local_id[e[1]] < 0 || local_id[e[2]] < 0) continue;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (e[a] != e[b])
                    pairs.emplace_back(local_id[e[a]], local_id[e[b]]);
    }
    Graph primal = graph_from_pairs(static_cast<int>(kept.size()), std::move(pairs));
    std::vector<std::uint32_t> is_local = best_is(primal);

    // The set must be independent in the whole active hypergraph and may fill
    // only one slot of any active edge; drop offenders in ascending order,
    // keeping the first of every conflicting pair.
    ActiveIncidence inc(view);
    std::vector<char> edge_hit(h.edge_count(), 0);
    std::vector<Vertex> chosen;
    chosen.reserve(is_local.size());
    for (std::uint32_t lv : is_local) {
        const Vertex v = kept[lv];
        bool ok = true;
        for (std::uint32_t idx = inc.off[v]; idx < inc.off[v + 1] && ok; ++idx) {
            const std::uint32_t ei = inc.edge_ids[idx];
            if (edge_hit[ei] || duplicated_in(h, ei, v)) ok = false;
        }
        if (!ok) continue;
        chosen.push_back(v);
        for (std::uint32_t idx = inc.off[v]; idx < inc.off[v + 1]; ++idx)
            edge_hit[inc.edge_ids[idx]] = 1;
    }

    if (chosen.empty()) {
        // every candidate fills two slots somewhere; fall back to a single
        // vertex that fills at most one slot of each of its edges
        for (Vertex v : view.vertices) {
            if (inc.off[v] == inc.off[v + 1]) continue;
            bool ok = true;
            for (std::uint32_t idx = inc.off[v]; idx < inc.off[v + 1] && ok; ++idx)
                if (duplicated_in(h, inc.edge_ids[idx], v)) ok = false;
            if (ok) {
                chosen.push_back(v);
                break;
            }
        }
        step.branch = Branch::Degenerate;
        if (chosen.empty())
            throw PromiseViolation(
                "every active vertex fills two slots of some edge; such a chain of "
                "forced colours rules out an LO 2-colouring");
    }

    step.vertices = std::move(chosen);
    return step;
}

ProgressStep sparse_progress(const Hypergraph& h, double delta) {
    return sparse_progress(whole_view(h), delta);
}

ProgressStep dense_progress(const ActiveView& view) {
    const Hypergraph& h = *view.h;
    ProgressStep step;
    step.kind = ProgressKind::Type2;
    step.branch = Branch::Dense;
    step.n_active = view.vertices.size();
    step.m_active = view.edges.size();

    // compact the active vertices so inactive ones cannot enter the support
    std::vector<int> local_id(h.n, -1);
    for (std::size_t i = 0; i < view.vertices.size(); ++i) local_id[view.vertices[i]] = static_cast<int>(i);

    Gf2System sys;
    sys.n_vars = static_cast<int>(view.vertices.size());
    sys.rows.reserve(view.edges.size());
    for (std::uint32_t ei : view.edges) {
        BitVec row(sys.n_vars);
        for (Vertex v : h.edge(ei)) row.flip(local_id[v]);
        sys.rows.push_back(std::move(row));
    }
    BitVec x = max_ones_approx(sys);
    for (int i = 0; i < sys.n_vars; ++i)
        if (x.get(i)) step.vertices.push_back(view.vertices[i]);
    return step;
}

ProgressStep dense_progress(const Hypergraph& h) {
    return dense_progress(whole_view(h));
}

SolveResult lo_colour(const Hypergraph& h) {
    if (h.r != 3) throw std::invalid_argument("lo_colour requires a 3-uniform hypergraph");

    LineariseResult lin = linearise(h);
    const Hypergraph& lh = lin.h;
    const int n = lh.n;
    const std::size_t m = lh.edge_count();

    SolveResult result;
    result.vertices_after_linearise = n;

    std::vector<std::uint32_t> inc_off(n + 1, 0);
    for (Vertex v : lh.edge_data) ++inc_off[v + 1];
    for (int v = 0; v < n; ++v) inc_off[v + 1] += inc_off[v];
    std::vector<std::uint32_t> inc(lh.edge_data.size());
    {
        std::vector<std::uint32_t> fill(inc_off.begin(), inc_off.end() - 1);
        for (std::size_t i = 0; i < m; ++i)
            for (Vertex v : lh.edge(i)) inc[fill[v]++] = static_cast<std::uint32_t>(i);
    }

    std::vector<int> prov(n, 0); // provisional colours, 0 = unassigned
    std::vector<char> edge_alive(m, 1);

    ActiveView view;
    view.h = &lh;
    view.vertices.resize(n);
    for (int v = 0; v < n; ++v) view.vertices[v] = static_cast<Vertex>(v);
    view.edges.resize(m);
    for (std::size_t i = 0; i < m; ++i) view.edges[i] = static_cast<std::uint32_t>(i);

    int lo = 1;
    int hi = n + 2;

    while (!view.edges.empty()) {
        const double delta = delta_threshold(view.vertices.size());
        const double threshold = static_cast<double>(view.vertices.size()) * delta;

        ProgressStep step;
        if (static_cast<double>(view.edges.size()) <= threshold) {
            step = sparse_progress(view, delta);
            if (step.branch == Branch::Degenerate)
                ++result.branch_degenerate;
            else
                ++result.branch_sparse;
        } else {
            ProgressStep dense = dense_progress(view);
            ProgressStep sparse = sparse_progress(view, delta);
            if (!dense.vertices.empty() && dense.vertices.size() >= sparse.vertices.size()) {
                step = std::move(dense);
                ++result.branch_dense;
            } else {
                step = std::move(sparse);
                if (step.branch == Branch::Degenerate) {
                    ++result.branch_degenerate;
                } else {
                    step.branch = Branch::DenseFallback;
                    ++result.branch_fallback;
                }
            }
        }

        step.colour = (step.kind == ProgressKind::Type1) ? hi-- : lo++;
        if (step.kind == ProgressKind::Type1)
            ++result.steps_type1;
        else
            ++result.steps_type2;

        for (Vertex v : step.vertices) {
            prov[v] = step.colour;
            for (std::uint32_t idx = inc_off[v]; idx < inc_off[v + 1]; ++idx)
                edge_alive[inc[idx]] = 0;
        }

        std::vector<std::uint32_t> next_edges;
        next_edges.reserve(view.edges.size());
        for (std::uint32_t ei : view.edges)
            if (edge_alive[ei]) next_edges.push_back(ei);
        view.edges = std::move(next_edges);

        std::vector<Vertex> next_vertices;
        next_vertices.reserve(view.vertices.size());
        for (Vertex v : view.vertices)
            if (prov[v] == 0) next_vertices.push_back(v);
        view.vertices = std::move(next_vertices);

        result.steps.push_back(std::move(step));
    }

    // one mid colour for everything left; strictly above every small colour
    // and below every large one
    const int mid = lo;
    for (Vertex v : view.vertices) prov[v] = mid;

    // compact to [1, K] preserving order
    std::vector<int> used(prov.begin(), prov.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    Colouring on_lin;
    on_lin.k = static_cast<int>(used.size());
    on_lin.assignment.resize(n);
    for (int v = 0; v < n; ++v) {
        const int c = static_cast<int>(
            std::lower_bound(used.begin(), used.end(), prov[v]) - used.begin());
        on_lin.assignment[v] = c + 1;
    }
    if (n == 0) on_lin.k = 1;

    result.colouring = lift_colouring(lin.map, on_lin);
    result.colouring.k = std::max(on_lin.k, 1);
    result.colours_used = result.colouring.k;

    if (!verify_lo_colouring(h, result.colouring))
        throw PromiseViolation("produced colouring failed verification; "
                               "input violated the LO-2-colourability promise");
    return result;
}

} // namespace lohg
