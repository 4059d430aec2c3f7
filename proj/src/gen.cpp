#include "lohg/gen.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "lohg/rng.hpp"

namespace lohg {

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(a) << 32) | b;
}

} // namespace

PlantedInstance gen_planted(const GenSpec& spec) {
    if (spec.n < 0 || spec.frac2 <= 0.0 || spec.frac2 >= 1.0)
        throw InfeasibleSpec("gen_planted: need n >= 0 and 0 < frac2 < 1");

    PlantedInstance out;
    out.h = Hypergraph(3, spec.n);
    out.witness.k = 2;
    out.witness.assignment.assign(spec.n, 1);
    if (spec.m == 0 && spec.n < 2) return out;
    if (spec.n < 2) throw InfeasibleSpec("gen_planted: m > 0 needs n >= 2");

    Rng rng(spec.seed);

    // planted colour-2 set: partial Fisher-Yates over the identity permutation
    const int n2 = std::clamp<int>(static_cast<int>(std::llround(spec.frac2 * spec.n)), 1,
                                   spec.n - 1);
    std::vector<Vertex> ids(spec.n);
    for (int v = 0; v < spec.n; ++v) ids[v] = static_cast<Vertex>(v);
    for (int i = 0; i < n2; ++i) {
        std::size_t j = i + rng.below(spec.n - i);
        std::swap(ids[i], ids[j]);
    }
    std::vector<Vertex> two(ids.begin(), ids.begin() + n2);
    std::vector<Vertex> one(ids.begin() + n2, ids.end());
    std::sort(two.begin(), two.end());
    std::sort(one.begin(), one.end());
    for (Vertex v : two) out.witness.assignment[v] = 2;

    if (spec.m == 0) return out;
    if (one.size() < 2 && !spec.allow_degenerate)
        throw InfeasibleSpec("gen_planted: colour-1 set too small for distinct (a, b)");

    if (spec.linear) {
        // capacity bounds: each edge uses one colour-1 pair and two cross pairs
        const std::uint64_t c1 = one.size();
        const std::uint64_t c1_pairs = c1 * (c1 - 1) / 2 + (spec.allow_degenerate ? c1 : 0);
        const std::uint64_t cross_pairs = c1 * two.size();
        if (spec.m > c1_pairs || 2 * spec.m > cross_pairs)
            throw InfeasibleSpec("gen_planted: linear spec exceeds pair capacity");
    }

    std::unordered_set<std::uint64_t> used_pairs;
    if (spec.linear) used_pairs.reserve(3 * spec.m);

    out.h.edge_data.reserve(spec.m * 3);
    std::uint64_t attempts = 0;
    const std::uint64_t cap = 100 * static_cast<std::uint64_t>(spec.m);
    std::size_t made = 0;
    while (made < spec.m) {
        if (attempts++ >= cap)
            throw InfeasibleSpec("gen_planted: rejection cap reached (linear spec too dense?)");
        Vertex t = two[rng.below(two.size())];
        Vertex a = one[rng.below(one.size())];
        Vertex b = one[rng.below(one.size())];
        if (a == b && !spec.allow_degenerate) continue;
        Vertex e[3] = {a, b, t};
        std::sort(e, e + 3);
        if (spec.linear) {
            const std::uint64_t keys[3] = {pair_key(e[0], e[1]), pair_key(e[0], e[2]),
                                           pair_key(e[1], e[2])};
            if (used_pairs.contains(keys[0]) || used_pairs.contains(keys[1]) ||
                used_pairs.contains(keys[2]))
                continue;
            used_pairs.insert(keys, keys + 3);
        }
        out.h.add_edge(std::span<const Vertex>(e, 3));
        ++made;
    }
    return out;
}

PlantedInstance gen_sparse(int n, double delta, std::uint64_t seed) {
    GenSpec spec;
    spec.n = n;
    spec.m = static_cast<std::size_t>(std::floor(n * delta / 4.0));
    spec.linear = false;
    spec.seed = seed;
    return gen_planted(spec);
}

PlantedInstance gen_dense(int n, double delta, std::uint64_t seed) {
    GenSpec spec;
    spec.n = n;
    spec.m = static_cast<std::size_t>(std::ceil(4.0 * n * delta));
    spec.linear = true;
    spec.seed = seed;
    return gen_planted(spec);
}

} // namespace lohg
