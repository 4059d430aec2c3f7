#include "lohg/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace lohg {

namespace {

struct EdgeState {
    int assigned = 0;
    int max = 0;
    int max_count = 0;
};

struct ExactSearcher {
    const Hypergraph& h;
    int k;
    std::uint64_t budget;

    std::vector<int> order;        // variable order: degree desc, id asc
    std::vector<std::uint32_t> inc_off;
    std::vector<std::uint32_t> inc; // vertex -> incident edge ids (slot-wise)
    std::vector<EdgeState> state;
    std::vector<int> colour;
    SearchStats stats;
    bool out_of_budget = false;

    explicit ExactSearcher(const Hypergraph& hg, int kk, std::uint64_t b)
        : h(hg), k(kk), budget(b) {
        const std::size_t m = h.edge_count();
        order.resize(h.n);
        std::iota(order.begin(), order.end(), 0);
        auto deg = h.degrees();
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b2) { return deg[a] > deg[b2]; });

        // slot-wise incidence: an edge appears once per slot of the vertex,
        // so a duplicated vertex updates its edge state twice
        inc_off.assign(h.n + 1, 0);
        for (Vertex v : h.edge_data) ++inc_off[v + 1];
        for (int v = 0; v < h.n; ++v) inc_off[v + 1] += inc_off[v];
        inc.resize(h.edge_data.size());
        std::vector<std::uint32_t> fill(inc_off.begin(), inc_off.end() - 1);
        for (std::size_t i = 0; i < m; ++i)
            for (Vertex v : h.edge(i)) inc[fill[v]++] = static_cast<std::uint32_t>(i);

        state.assign(m, {});
        colour.assign(h.n, 0);
    }

    bool place(int v, int c, std::vector<EdgeState>& trail) {
        bool ok = true;
        for (std::uint32_t idx = inc_off[v]; idx < inc_off[v + 1]; ++idx) {
            EdgeState& es = state[inc[idx]];
            trail.push_back(es);
            ++es.assigned;
            if (c > es.max) {
                es.max = c;
                es.max_count = 1;
            } else if (c == es.max) {
                ++es.max_count;
            }
            if (es.assigned == h.r && es.max_count != 1) ok = false;
        }
        return ok;
    }

    void unplace(int v, const std::vector<EdgeState>& trail) {
        std::size_t t = trail.size();
        for (std::uint32_t idx = inc_off[v + 1]; idx-- > inc_off[v];)
            state[inc[idx]] = trail[--t];
    }

    bool dfs(std::size_t pos) {
        if (pos == order.size()) return true;
        const int v = order[pos];
        std::vector<EdgeState> trail;
        trail.reserve(inc_off[v + 1] - inc_off[v]);
        for (int c = 1; c <= k; ++c) {
            if (stats.nodes >= budget) {
                out_of_budget = true;
                return false;
            }
            ++stats.nodes;
            trail.clear();
            colour[v] = c;
            if (place(v, c, trail)) {
                if (dfs(pos + 1)) return true;
                if (out_of_budget) {
                    unplace(v, trail);
                    colour[v] = 0;
                    return false;
                }
            }
            unplace(v, trail);
            colour[v] = 0;
            ++stats.backtracks;
        }
        return false;
    }
};

} // namespace

ExactResult exact_lo_colour(const Hypergraph& h, int k, std::uint64_t node_budget) {
    if (k < 1) throw std::invalid_argument("exact_lo_colour: k >= 1 required");
    const auto t0 = std::chrono::steady_clock::now();
    ExactSearcher s(h, k, node_budget);
    const bool found = s.dfs(0);
    const auto t1 = std::chrono::steady_clock::now();
    s.stats.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    ExactResult res;
    res.stats = s.stats;
    if (found) {
        res.status = ExactStatus::Found;
        res.colouring = Colouring{k, s.colour};
    } else if (s.out_of_budget) {
        res.status = ExactStatus::BudgetExceeded;
    } else {
        res.status = ExactStatus::Unsatisfiable;
    }
    return res;
}

bool is_lo2_colourable(const Hypergraph& h, std::uint64_t node_budget) {
    ExactResult r = exact_lo_colour(h, 2, node_budget);
    if (r.status == ExactStatus::BudgetExceeded)
        throw std::runtime_error("is_lo2_colourable: node budget exceeded");
    return r.status == ExactStatus::Found;
}

} // namespace lohg
