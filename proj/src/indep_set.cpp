#include "lohg/indep_set.hpp"

#include <algorithm>
#include <cstddef>

namespace lohg {

std::vector<std::uint32_t> greedy_is(const Graph& g) {
    const int n = g.n;
    std::vector<std::uint32_t> deg(n);
    std::size_t max_deg = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<std::uint32_t>(g.adj[v].size());
        max_deg = std::max<std::size_t>(max_deg, deg[v]);
    }
    // min-degree buckets with lazy (stale) entries; initial fill ascending so
    // the first pop of every bucket is the lowest id
    std::vector<std::vector<std::uint32_t>> bucket(max_deg + 1);
    std::vector<std::size_t> head(max_deg + 1, 0);
    for (int v = 0; v < n; ++v) bucket[deg[v]].push_back(v);

    std::vector<char> removed(n, 0);
    std::vector<std::uint32_t> is;
    std::size_t cur = 0;
    int left = n;
    while (left > 0) {
        while (cur <= max_deg && head[cur] >= bucket[cur].size()) ++cur;
        std::uint32_t v = bucket[cur][head[cur]++];
        if (removed[v] || deg[v] != cur) continue;
        is.push_back(v);
        // delete the closed neighbourhood
        removed[v] = 1;
        --left;
        std::vector<std::uint32_t> newly;
        for (std::uint32_t u : g.adj[v]) {
            if (removed[u]) continue;
            removed[u] = 1;
            --left;
            newly.push_back(u);
        }
        for (std::uint32_t u : newly) {
            // u's surviving neighbours lose one degree
            for (std::uint32_t w : g.adj[u]) {
                if (removed[w]) continue;
                --deg[w];
                bucket[deg[w]].push_back(w);
                if (deg[w] < cur) cur = deg[w];
            }
        }
    }
    return is;
}

namespace {

struct RamseyResult {
    std::vector<std::uint32_t> clique;
    std::vector<std::uint32_t> is;
};

// combine(v, result(S cap N(v)), result(S minus N[v]))
RamseyResult combine(std::uint32_t v, RamseyResult a, RamseyResult b) {
    RamseyResult out;
    if (a.clique.size() + 1 >= b.clique.size()) {
        out.clique = std::move(a.clique);
        out.clique.push_back(v);
    } else {
        out.clique = std::move(b.clique);
    }
    if (a.is.size() > b.is.size() + 1) {
        out.is = std::move(a.is);
    } else {
        out.is = std::move(b.is);
        out.is.push_back(v);
    }
    return out;
}

struct ChainLink {
    std::uint32_t v;
    RamseyResult neigh; // result of the S cap N(v) subproblem
    bool filled = false;
};

struct Frame {
    std::vector<std::uint32_t> s; // tail set still being walked
    std::vector<ChainLink> chain;
};

// Iterative Ramsey: walks the "rest" side as a loop, pushes the "neighbour"
// side as a child frame, and folds the chain backwards on completion.
// `visits` counts touched set elements.
RamseyResult ramsey(const Graph& g, std::vector<std::uint32_t> s0, std::vector<char>& mark,
                    std::uint64_t& visits) {
    std::vector<Frame> stack;
    stack.push_back(Frame{std::move(s0), {}});
    RamseyResult child;
    bool child_ready = false;

    while (!stack.empty()) {
        Frame& f = stack.back();
        if (child_ready) {
            f.chain.back().neigh = std::move(child);
            f.chain.back().filled = true;
            child_ready = false;
        }
        if (!f.s.empty()) {
            std::uint32_t v = f.s.front(); // lowest id: sets kept ascending
            visits += f.s.size();
            for (std::uint32_t u : g.adj[v]) mark[u] = 1;
            std::vector<std::uint32_t> neigh, rest;
            for (std::size_t i = 1; i < f.s.size(); ++i) {
                std::uint32_t u = f.s[i];
                (mark[u] ? neigh : rest).push_back(u);
            }
            for (std::uint32_t u : g.adj[v]) mark[u] = 0;
            f.chain.push_back(ChainLink{v, {}, false});
            f.s = std::move(rest);
            stack.push_back(Frame{std::move(neigh), {}});
            continue;
        }
        // fold this frame
        RamseyResult res;
        for (auto it = f.chain.rbegin(); it != f.chain.rend(); ++it)
            res = combine(it->v, std::move(it->neigh), std::move(res));
        stack.pop_back();
        child = std::move(res);
        child_ready = true;
    }
    return child;
}

} // namespace

namespace {

// One Ramsey pass over the vertices of `remaining` (ascending). The rest
// side is walked as a doubly-linked list so each pivot costs O(deg) rather
// than O(|S|); the neighbour side is materialized and handled by the frame
// machine above.
RamseyResult ramsey_root(const Graph& g, const std::vector<std::uint32_t>& remaining,
                         std::vector<char>& mark, std::uint64_t& visits) {
    const int n = g.n;
    std::vector<std::int32_t> next(n + 1), prev(n + 1);
    std::vector<char> alive(n, 0);
    // sentinel at index n
    std::int32_t head = n;
    next[n] = prev[n] = n;
    for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) {
        const std::int32_t v = static_cast<std::int32_t>(*it);
        next[v] = next[head];
        prev[v] = head;
        prev[next[head]] = v;
        next[head] = v;
        alive[v] = 1;
    }

    auto unlink = [&](std::int32_t v) {
        next[prev[v]] = next[v];
        prev[next[v]] = prev[v];
        alive[v] = 0;
    };

    std::vector<ChainLink> chain;
    while (next[head] != head) {
        const std::uint32_t v = static_cast<std::uint32_t>(next[head]);
        unlink(v);
        std::vector<std::uint32_t> neigh;
        for (std::uint32_t u : g.adj[v]) {
            if (!alive[u]) continue;
            neigh.push_back(u);
            unlink(u);
        }
        visits += g.adj[v].size() + 1;
        chain.push_back(ChainLink{v, ramsey(g, std::move(neigh), mark, visits), true});
    }
    RamseyResult res;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        res = combine(it->v, std::move(it->neigh), std::move(res));
    return res;
}

} // namespace

std::vector<std::uint32_t> clique_removal_is(const Graph& g) {
    const int n = g.n;
    std::vector<std::uint32_t> remaining(n);
    for (int v = 0; v < n; ++v) remaining[v] = v;
    std::vector<char> mark(n, 0);
    std::vector<char> gone(n, 0);

    // Rounds beyond the first stop once the visit budget runs out or no
    // remaining set can beat the incumbent; keeps the whole call near-linear
    // on the large graphs the colouring driver feeds it.
    const std::uint64_t budget =
        2 * (static_cast<std::uint64_t>(n) + 2 * g.edge_count()) + (1ULL << 16);
    std::uint64_t visits = 0;

    std::vector<std::uint32_t> best;
    bool first = true;
    while (!remaining.empty()) {
        if (!first && (visits >= budget || remaining.size() <= best.size())) break;
        RamseyResult res = ramsey_root(g, remaining, mark, visits);
        if (res.is.size() > best.size()) {
            std::sort(res.is.begin(), res.is.end());
            best = std::move(res.is);
        }
        for (std::uint32_t v : res.clique) gone[v] = 1;
        std::vector<std::uint32_t> nxt;
        nxt.reserve(remaining.size() - res.clique.size());
        for (std::uint32_t v : remaining)
            if (!gone[v]) nxt.push_back(v);
        remaining = std::move(nxt);
        first = false;
    }
    std::sort(best.begin(), best.end());
    return best;
}

std::vector<std::uint32_t> best_is(const Graph& g) {
    std::vector<std::uint32_t> a = greedy_is(g);
    std::vector<std::uint32_t> b = clique_removal_is(g);
    std::vector<std::uint32_t>& pick = (b.size() > a.size()) ? b : a;
    std::sort(pick.begin(), pick.end());
    return pick;
}

} // namespace lohg
