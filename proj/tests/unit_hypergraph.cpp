#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lohg/hypergraph.hpp"
#include "lohg/io.hpp"
#include "lohg/gen.hpp"
#include "lohg/exact.hpp"
#include "oracles.hpp"

using namespace lohg;

namespace {

// the running example: V = [4], E = {(1,2,3), (1,2,4)} (stored 0-based)
Hypergraph example_hyper() {
    return Hypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}});
}

} // namespace

TEST_CASE("verify_lo_colouring on the running example") {
    Hypergraph h = example_hyper();
    CHECK(verify_lo_colouring(h, Colouring{2, {1, 1, 2, 2}}));
    CHECK(verify_lo_colouring(h, Colouring{4, {1, 2, 3, 4}})); // c'(x) = x
    CHECK_FALSE(verify_lo_colouring(h, Colouring{2, {2, 2, 1, 1}})); // 3 - c(x)
    CHECK_THROWS_AS(verify_lo_colouring(h, Colouring{2, {1, 1, 2}}), std::invalid_argument);
}

TEST_CASE("verify_lo_colouring agrees with a direct recount on random pairs") {
    int done = 0;
    for (std::uint64_t seed = 0; done < 10000; ++seed) {
        Rng rng(seed);
        const int n = 2 + static_cast<int>(rng.below(8));
        const int m = static_cast<int>(rng.below(12));
        const int k = 1 + static_cast<int>(rng.below(4));
        Hypergraph h = oracle::random_hypergraph(n, m, seed * 3 + 1);
        Colouring c;
        c.k = k;
        for (int v = 0; v < n; ++v) c.assignment.push_back(1 + static_cast<int>(rng.below(k)));
        CHECK(verify_lo_colouring(h, c) == oracle::lo_valid(h, c.assignment));
        ++done;
    }
}

TEST_CASE("is_independent_set") {
    Hypergraph h = example_hyper();
    CHECK(is_independent_set(h, {2, 3}));
    CHECK_FALSE(is_independent_set(h, {0, 1}));
    CHECK(is_independent_set(h, {}));
    CHECK_THROWS_AS(is_independent_set(h, {7}), std::invalid_argument);
}

TEST_CASE("primal_graph") {
    SUBCASE("running example") {
        Graph g = primal_graph(example_hyper());
        std::set<std::pair<int, int>> edges;
        for (int v = 0; v < g.n; ++v)
            for (auto u : g.adj[v])
                if (v < static_cast<int>(u)) edges.insert({v, u});
        std::set<std::pair<int, int>> expect{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}};
        CHECK(edges == expect);
    }
    SUBCASE("no edges") {
        Hypergraph h(3, 5);
        CHECK(primal_graph(h).edge_count() == 0);
    }
    SUBCASE("repeated slot suppresses the loop") {
        Hypergraph h(3, 2, {{0, 0, 1}});
        Graph g = primal_graph(h);
        CHECK(g.edge_count() == 1);
        CHECK(g.adj[0] == std::vector<std::uint32_t>{1});
    }
    SUBCASE("primal degree bounded by (r-1) * hypergraph degree") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            Hypergraph h = oracle::random_hypergraph(12, 20, seed);
            Graph g = primal_graph(h);
            auto deg = h.degrees();
            for (int v = 0; v < h.n; ++v) CHECK(g.degree(v) <= 2 * deg[v]);
        }
    }
}

TEST_CASE("linearise") {
    SUBCASE("merges the two thirds of a shared pair") {
        auto [h2, mm] = linearise(example_hyper());
        CHECK(h2.n == 3);
        CHECK(h2.edge_count() == 1);
        CHECK(mm.find(2) == mm.find(3));
        CHECK(mm.n_new == 3);
    }
    SUBCASE("already-linear input is unchanged") {
        Hypergraph h(3, 5, {{0, 1, 2}, {2, 3, 4}});
        auto [h2, mm] = linearise(h);
        CHECK(h2.n == 5);
        CHECK(h2.edge_data == h.edge_data);
        for (int v = 0; v < 5; ++v) CHECK(mm.find(v) == static_cast<Vertex>(v));
    }
    SUBCASE("merge creating a degenerate but non-constant edge") {
        Hypergraph h(3, 5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
        auto [h2, mm] = linearise(h);
        CHECK(h2.n == 4);
        CHECK(h2.edge_count() == 2); // (0,1,m) and (m,m,4)
        std::vector<Vertex> degen{h2.edge(1).begin(), h2.edge(1).end()};
        CHECK(degen[0] == degen[1]);
        CHECK(degen[1] != degen[2]);
    }
    SUBCASE("constant edge after merges reports promise violation") {
        // (0,1,2) and (0,1,3) force 2 = 3; edge (0,2,3) then pairs (0,2)
        // with (0,3): chase it further so 0 merges into the pile too
        Hypergraph h(3, 4,
                     {{0, 1, 2}, {0, 1, 3}, {2, 3, 0}, {2, 3, 1}});
        // 2~3 from the first pair; then (2,3,0),(2,3,1) share pair (2,3): 0~1;
        // edges become (0,0,2) and (2,2,0): pair (0,2) twice with thirds 0, 2
        // -> 0~2 -> constant edge
        CHECK_THROWS_AS(linearise(h), PromiseViolation);
    }
    SUBCASE("idempotent on generated instances") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            GenSpec spec;
            spec.n = 30;
            spec.m = 60;
            spec.seed = seed;
            auto inst = gen_planted(spec);
            auto lin = linearise(inst.h);
            auto again = linearise(lin.h);
            CHECK(again.h.n == lin.h.n);
            CHECK(again.h.edge_data == lin.h.edge_data);
        }
    }
}

TEST_CASE("lift_colouring") {
    SUBCASE("identity map is the identity") {
        MergeMap mm = MergeMap::identity(4);
        Colouring c{3, {1, 2, 3, 1}};
        CHECK(lift_colouring(mm, c).assignment == c.assignment);
    }
    SUBCASE("merged vertices share their representative's colour") {
        auto [h2, mm] = linearise(example_hyper());
        Colouring c2{2, {1, 1, 2}};
        Colouring c = lift_colouring(mm, c2);
        CHECK(c.assignment[2] == c.assignment[3]);
        CHECK(verify_lo_colouring(example_hyper(), c));
    }
    SUBCASE("every valid colouring of the linearised instance lifts") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            GenSpec spec;
            spec.n = 10;
            spec.m = 14;
            spec.seed = seed;
            auto inst = gen_planted(spec);
            auto lin = linearise(inst.h);
            for (int k = 2; k <= 3; ++k) {
                ExactResult res = exact_lo_colour(lin.h, k);
                REQUIRE(res.status == ExactStatus::Found);
                Colouring lifted = lift_colouring(lin.map, *res.colouring);
                CHECK(verify_lo_colouring(inst.h, lifted));
            }
        }
    }
}

TEST_CASE("instance format round-trips") {
    SUBCASE("canonical corpus of generated instances") {
        int files = 0;
        for (std::uint64_t seed = 0; seed < 70; ++seed) {
            GenSpec spec;
            spec.n = 1 + static_cast<int>(seed % 17);
            spec.m = (spec.n >= 2) ? seed % 23 : 0;
            spec.allow_degenerate = (seed % 3 == 0);
            spec.seed = seed;
            PlantedInstance inst;
            try {
                inst = gen_planted(spec);
            } catch (const InfeasibleSpec&) {
                continue;
            }
            const std::string text = serialize(inst.h);
            Hypergraph back = parse_hypergraph_string(text);
            CHECK(serialize(back) == text);
            CHECK(back.n == inst.h.n);
            CHECK(back.edge_data == inst.h.edge_data);

            const std::string ctext = serialize(inst.witness);
            Colouring cback = parse_colouring_string(ctext);
            CHECK(serialize(cback) == ctext);
            files += 2;
        }
        CHECK(files >= 100);
    }
    SUBCASE("n = 1 and duplicate slots") {
        Hypergraph h1(3, 1);
        CHECK(serialize(parse_hypergraph_string(serialize(h1))) == serialize(h1));
        Hypergraph hd(3, 2, {{0, 0, 1}});
        CHECK(serialize(parse_hypergraph_string(serialize(hd))) == serialize(hd));
    }
    SUBCASE("comments and slot order are normalized") {
        Hypergraph h = parse_hypergraph_string("c a comment\np lohg 3 4 2\ne 3 2 1\nc mid\ne 4 2 1\n");
        CHECK(serialize(h) == "p lohg 3 4 2\ne 1 2 3\ne 1 2 4\n");
    }
    SUBCASE("malformed inputs") {
        CHECK_THROWS_AS(parse_hypergraph_string(""), ParseError);
        CHECK_THROWS_AS(parse_hypergraph_string("p lohg 3 4\n"), ParseError);
        CHECK_THROWS_AS(parse_hypergraph_string("p wrong 3 4 0\n"), ParseError);
        CHECK_THROWS_AS(parse_hypergraph_string("p lohg 3 4 1\ne 1 2\n"), ParseError);
        CHECK_THROWS_AS(parse_hypergraph_string("p lohg 3 4 1\ne 1 2 9\n"), ParseError);
        CHECK_THROWS_AS(parse_hypergraph_string("p lohg 3 4 1\ne 2 2 2\n"), ParseError);
        CHECK_THROWS_AS(parse_hypergraph_string("p lohg 3 4 1\ne 1 2 3\ne 1 2 4\n"), ParseError);
        CHECK_THROWS_AS(parse_colouring_string("s lo 2 3\n1 2\n"), ParseError);
        CHECK_THROWS_AS(parse_colouring_string("s lo 2 3\n1 2 5\n"), ParseError);
    }
}
