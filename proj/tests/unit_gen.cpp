#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lohg/gen.hpp"
#include "lohg/io.hpp"
#include "lohg/solver.hpp"

using namespace lohg;

namespace {

// pairwise multiset-overlap scan: no two edges may share two slots
bool linear_by_scan(const Hypergraph& h) {
    std::multiset<std::pair<Vertex, Vertex>> pairs;
    const std::size_t m = h.edge_count();
    for (std::size_t i = 0; i < m; ++i) {
        auto e = h.edge(i);
        pairs.insert({e[0], e[1]});
        pairs.insert({e[0], e[2]});
        pairs.insert({e[1], e[2]});
    }
    for (const auto& p : pairs)
        if (pairs.count(p) > 1) return false;
    return true;
}

} // namespace

TEST_CASE("gen_planted basics") {
    SUBCASE("every edge covers exactly one planted colour-2 vertex") {
        GenSpec spec;
        spec.n = 4;
        spec.m = 2;
        spec.seed = 7;
        auto inst = gen_planted(spec);
        REQUIRE(inst.h.edge_count() == 2);
        CHECK(verify_lo_colouring(inst.h, inst.witness));
        for (std::size_t i = 0; i < inst.h.edge_count(); ++i) {
            int twos = 0;
            for (Vertex v : inst.h.edge(i)) twos += inst.witness.assignment[v] == 2;
            CHECK(twos == 1);
        }
    }
    SUBCASE("empty edge set") {
        GenSpec spec;
        spec.n = 6;
        spec.m = 0;
        auto inst = gen_planted(spec);
        CHECK(inst.h.edge_count() == 0);
        CHECK(verify_lo_colouring(inst.h, inst.witness));
    }
    SUBCASE("linear output survives an exhaustive overlap scan") {
        GenSpec spec;
        spec.n = 100;
        spec.m = 500;
        spec.linear = true;
        spec.seed = 3;
        auto inst = gen_planted(spec);
        CHECK(inst.h.edge_count() == 500);
        CHECK(linear_by_scan(inst.h));
        CHECK(verify_lo_colouring(inst.h, inst.witness));
    }
    SUBCASE("infeasible linear spec fails gracefully") {
        GenSpec spec;
        spec.n = 6;
        spec.m = 500;
        spec.linear = true;
        CHECK_THROWS_AS(gen_planted(spec), InfeasibleSpec);
    }
    SUBCASE("bad parameters are rejected") {
        GenSpec spec;
        spec.n = 10;
        spec.m = 5;
        spec.frac2 = 1.5;
        CHECK_THROWS_AS(gen_planted(spec), InfeasibleSpec);
    }
}

TEST_CASE("same seed means bit-identical instances") {
    GenSpec spec;
    spec.n = 50;
    spec.m = 120;
    spec.seed = 12345;
    auto a = gen_planted(spec);
    auto b = gen_planted(spec);
    CHECK(serialize(a.h) == serialize(b.h));
    CHECK(serialize(a.witness) == serialize(b.witness));
    spec.seed = 12346;
    auto c = gen_planted(spec);
    CHECK(serialize(a.h) != serialize(c.h));
}

TEST_CASE("planted witnesses always verify") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenSpec spec;
        spec.n = 5 + static_cast<int>(seed % 60);
        spec.m = seed % 100;
        spec.linear = (seed % 4 == 0);
        spec.seed = seed;
        PlantedInstance inst;
        try {
            inst = gen_planted(spec);
        } catch (const InfeasibleSpec&) {
            continue;
        }
        CHECK(verify_lo_colouring(inst.h, inst.witness));
    }
}

TEST_CASE("sparse and dense wrappers") {
    const int n = 400;
    const double delta = delta_threshold(n);
    SUBCASE("sparse edge budget") {
        auto inst = gen_sparse(n, delta, 1);
        CHECK(inst.h.edge_count() <= static_cast<std::size_t>(n * delta / 4.0));
        CHECK(verify_lo_colouring(inst.h, inst.witness));
    }
    SUBCASE("dense edge budget and linearity") {
        const int nd = 1600;
        const double dd = delta_threshold(nd);
        auto inst = gen_dense(nd, dd, 1);
        CHECK(inst.h.edge_count() >= static_cast<std::size_t>(4.0 * nd * dd));
        CHECK(linear_by_scan(inst.h));
        CHECK(verify_lo_colouring(inst.h, inst.witness));
    }
}
