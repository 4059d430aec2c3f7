#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lohg/minion.hpp"
#include "lohg/rng.hpp"
#include "oracles.hpp"

using namespace lohg::minion;

TEST_CASE("lo_template") {
    CHECK(lo_template(2, 3).relation.size() == 3);  // permutations of (1,1,2)
    CHECK(lo_template(3, 3).relation.size() == 15);
    CHECK(lo_template(1, 3).relation.empty());
    CHECK(lo_template(3, 4).relation.size() == 36);
}

TEST_CASE("is_polymorphism") {
    SUBCASE("quinary parity on the disequality template") {
        Template neq;
        neq.domain_size = 2;
        neq.arity = 2;
        neq.relation = {{1, 2}, {2, 1}};
        TupleFunction f;
        f.dom = 2;
        f.cod = 2;
        f.arity = 5;
        for (int idx = 0; idx < 32; ++idx) {
            int ones = __builtin_popcount(static_cast<unsigned>(idx));
            // value == sum of arguments mod 2 (argument 2 contributes 0)
            int sum_mod2 = (5 - ones) % 2;
            f.table.push_back(sum_mod2 == 0 ? 2 : 1);
        }
        CHECK(is_polymorphism(f, neq, neq));
    }
    SUBCASE("constants are never LO polymorphisms") {
        Template lo23 = lo_template(2, 3);
        TupleFunction f;
        f.dom = 2;
        f.cod = 2;
        f.arity = 2;
        f.table = {1, 1, 1, 1};
        CHECK_FALSE(is_polymorphism(f, lo23, lo23));
    }
    SUBCASE("projections always are") {
        Template lo33 = lo_template(3, 3);
        TupleFunction f;
        f.dom = 3;
        f.cod = 3;
        f.arity = 2;
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                (void)b;
                f.table.push_back(a);
            }
        CHECK(is_polymorphism(f, lo33, lo33));
    }
}

TEST_CASE("enumerate_set_polymorphisms matches brute force") {
    SUBCASE("r=3 k=2 n=1: the single forced table") {
        EnumResult res = enumerate_set_polymorphisms(3, 2, 1);
        REQUIRE(res.status == Status::Done);
        REQUIRE(res.items.size() == 1);
        CHECK(res.items[0].table == std::vector<std::uint8_t>{1, 2});
    }
    SUBCASE("r=3 k=2 n=3: exactly one singleton valued 2") {
        EnumResult res = enumerate_set_polymorphisms(3, 2, 3);
        REQUIRE(res.status == Status::Done);
        CHECK(res.items.size() == 3);
        for (const auto& f : res.items) {
            int twos = (f.table[1] == 2) + (f.table[2] == 2) + (f.table[4] == 2);
            CHECK(twos == 1);
        }
    }
    SUBCASE("counts match an ordered-partition brute force") {
        struct Case {
            int r, k, n;
        };
        for (Case c : {Case{5, 3, 2}, Case{3, 3, 2}, Case{3, 3, 3}, Case{4, 3, 2},
                       Case{3, 2, 3}, Case{4, 2, 3}}) {
            auto brute = oracle::brute_set_polymorphisms(c.r, c.k, c.n);
            EnumResult res = enumerate_set_polymorphisms(c.r, c.k, c.n);
            REQUIRE(res.status == Status::Done);
            REQUIRE(res.items.size() == brute.size());
            std::set<std::vector<std::uint8_t>> got;
            for (const auto& f : res.items) got.insert(f.table);
            for (const auto& t : brute) CHECK(got.contains(t));
        }
    }
    SUBCASE("budget exhaustion is distinct") {
        Budget tiny;
        tiny.max_nodes = 10;
        CHECK(enumerate_set_polymorphisms(3, 3, 3, tiny).status == Status::Budget);
    }
}

TEST_CASE("set minors") {
    EnumResult res = enumerate_set_polymorphisms(3, 3, 3);
    REQUIRE(res.status == Status::Done);
    // enumerated sets per ground size, for the closure check
    std::set<std::vector<std::uint8_t>> members[4];
    for (int q = 1; q <= 3; ++q) {
        EnumResult rq = enumerate_set_polymorphisms(3, 3, q);
        REQUIRE(rq.status == Status::Done);
        for (const auto& f : rq.items) members[q].insert(f.table);
    }

    SUBCASE("identity minor is the identity") {
        const auto& f = res.items[5];
        CHECK(minor(f, {1, 2, 3}, 3) == f);
    }
    SUBCASE("functoriality and closure on random maps") {
        lohg::Rng rng(7);
        for (int trial = 0; trial < 300; ++trial) {
            const auto& f = res.items[rng.below(res.items.size())];
            const int q = 1 + static_cast<int>(rng.below(3));
            const int t = 1 + static_cast<int>(rng.below(3));
            std::vector<int> pi(f.ground), sigma(q);
            for (int& x : pi) x = 1 + static_cast<int>(rng.below(q));
            for (int& x : sigma) x = 1 + static_cast<int>(rng.below(t));
            SetPolymorphism via_two = minor(minor(f, pi, q), sigma, t);
            std::vector<int> comp(f.ground);
            for (int i = 0; i < f.ground; ++i) comp[i] = sigma[pi[i] - 1];
            CHECK(via_two == minor(f, comp, t));
            CHECK(satisfies_partition_property(via_two, 3));
            CHECK(members[q].contains(minor(f, pi, q).table));
        }
    }
    SUBCASE("minor on singletons matches the preimage identity") {
        // g{x} = f(pi^{-1}(x)) checked pointwise
        const auto& f = res.items[0];
        std::vector<int> pi{2, 1, 2};
        SetPolymorphism g = minor(f, pi, 2);
        CHECK(g.table[1] == f.table[0b010]);       // {1}: preimage = {2}
        CHECK(g.table[2] == f.table[0b101]);       // {2}: preimage = {1, 3}
    }
}

TEST_CASE("free_structure_lo2") {
    SUBCASE("(5, 3, 3): domain and relation sizes") {
        FreeResult fr = free_structure_lo2(5, 3, 3);
        REQUIRE(fr.status == Status::Done);
        CHECK(fr.fs.domain.size() == 16);
        CHECK(fr.enumerated == 264);
        CHECK(fr.fs.arity == 3);
        // diagonal construction: every tuple is (f_1, f_2, f_3) of some f
        for (const auto& tup : fr.fs.relation) CHECK(tup.size() == 3);
    }
    SUBCASE("(3, 3, 3): binary part has 17 elements") {
        FreeResult fr = free_structure_lo2(3, 3, 3);
        REQUIRE(fr.status == Status::Done);
        CHECK(fr.fs.domain.size() == 17);
        CHECK(fr.enumerated == 306);
    }
    SUBCASE("(5, 3, 2) has a smaller domain than (3, 3, 2)") {
        FreeResult five = free_structure_lo2(5, 3, 2);
        FreeResult three = free_structure_lo2(3, 3, 2);
        REQUIRE(five.status == Status::Done);
        REQUIRE(three.status == Status::Done);
        CHECK(five.fs.domain.size() < three.fs.domain.size());
    }
}

TEST_CASE("find_homomorphism") {
    SUBCASE("identity endomorphism is found") {
        Template lo33 = lo_template(3, 3);
        HomResult res = find_homomorphism(lo33, lo33);
        REQUIRE(res.status == HomStatus::Found);
        for (std::size_t i = 0; i < res.map.size(); ++i)
            CHECK(res.map[i] >= 1);
    }
    SUBCASE("free structure of (5,3,·) maps to LO_3^3") {
        FreeResult fr = free_structure_lo2(5, 3, 3);
        REQUIRE(fr.status == Status::Done);
        HomResult res = find_homomorphism(fr.fs, lo_template(3, 3));
        CHECK(res.status == HomStatus::Found);
    }
    SUBCASE("free structure of (3,3,·) does not map to LO_3^4") {
        FreeResult fr = free_structure_lo2(3, 3, 4);
        REQUIRE(fr.status == Status::Done);
        HomResult res = find_homomorphism(fr.fs, lo_template(3, 4));
        CHECK(res.status == HomStatus::None);
    }
    SUBCASE("agrees with brute force on small random structures") {
        lohg::Rng rng(11);
        for (int trial = 0; trial < 40; ++trial) {
            const int dom = 3 + static_cast<int>(rng.below(3));
            Template target = lo_template(2 + static_cast<int>(rng.below(2)), 3);
            std::vector<std::vector<int>> rel;
            const int tuples = 1 + static_cast<int>(rng.below(5));
            for (int t = 0; t < tuples; ++t)
                rel.push_back({static_cast<int>(rng.below(dom)), static_cast<int>(rng.below(dom)),
                               static_cast<int>(rng.below(dom))});
            HomResult res = find_homomorphism(dom, rel, target);

            // brute force over all maps
            bool exists = false;
            std::vector<int> map(dom, 1);
            while (!exists) {
                bool ok = true;
                for (const auto& tup : rel) {
                    std::vector<int> img{map[tup[0]], map[tup[1]], map[tup[2]]};
                    if (std::find(target.relation.begin(), target.relation.end(), img) ==
                        target.relation.end()) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    exists = true;
                    break;
                }
                int i = dom - 1;
                while (i >= 0 && map[i] == target.domain_size) map[i--] = 1;
                if (i < 0) break;
                ++map[i];
            }
            CHECK((res.status == HomStatus::Found) == exists);
        }
    }
}

TEST_CASE("check_minion_hom_lo certifications at k = 3") {
    SUBCASE("(5, 3): exists") {
        MinionHomResult res = check_minion_hom_lo(5, 3, 3);
        CHECK(res.status == MinionHomStatus::Exists);
        CHECK(res.cross_checked);
    }
    SUBCASE("(4, 3): does not exist") {
        MinionHomResult res = check_minion_hom_lo(4, 3, 3);
        CHECK(res.status == MinionHomStatus::NotExists);
        CHECK(res.cross_checked);
    }
    SUBCASE("(3, 3): identity exists") {
        CHECK(check_minion_hom_lo(3, 3, 3).status == MinionHomStatus::Exists);
    }
    SUBCASE("(5, 7): arity-7 enumeration exceeds the budget") {
        CHECK(check_minion_hom_lo(5, 7, 3).status == MinionHomStatus::Budget);
    }
}

TEST_CASE("co-colourings") {
    SUBCASE("(5, 3, 2) found, and the explicit max(x,y,3) table verifies") {
        CoColResult res = co_colouring_search(5, 3, 2);
        REQUIRE(res.status == CoColStatus::Found);
        CHECK(verify_co_colouring(*res.table));
        CHECK(verify_co_colouring(max_xy3_cocolouring(3)));
    }
    SUBCASE("(6, 3, 2) refuted") {
        CHECK(co_colouring_search(6, 3, 2).status == CoColStatus::None);
    }
    SUBCASE("tightness at k = 4: K_6 colourable, K_7 not") {
        CHECK(co_colouring_search(6, 4, 2).status == CoColStatus::Found);
        CHECK(co_colouring_search(7, 4, 2).status == CoColStatus::None);
        CHECK(verify_co_colouring(max_xy3_cocolouring(4)));
    }
    SUBCASE("verification rejects a bad table") {
        CoColouring bad;
        bad.m = 4;
        bad.k = 1;
        bad.p = 2;
        bad.edge_colour = {1, 1, 1, 1, 1, 1}; // {1,2} and {3,4} share colour
        CHECK_FALSE(verify_co_colouring(bad));
    }
    SUBCASE("budget is distinct from refutation") {
        Budget tiny;
        tiny.max_nodes = 3;
        CHECK(co_colouring_search(6, 3, 2, tiny).status == CoColStatus::Budget);
    }
    SUBCASE("p = 3 bounded exploration on small cliques") {
        // K_4 has no 3 pairwise disjoint edges at all, so one colour works
        CoColResult res = co_colouring_search(4, 1, 3);
        REQUIRE(res.status == CoColStatus::Found);
        CHECK(verify_co_colouring(*res.table));
    }
}

TEST_CASE("impossible witnesses") {
    for (int k : {3, 4, 5}) {
        CHECK(verify_impossible_witness(k, 1));
        CHECK(verify_impossible_witness(k, 2));
    }
    SUBCASE("witness tables match the explicit description at k = 3") {
        SetPolymorphism f1 = impossible_witness_table(3, 1);
        CHECK(f1.ground == 4);
        CHECK(f1.table[0] == 1);               // empty set
        CHECK(f1.table[0b0001] == 1);          // singletons
        CHECK(f1.table[0b1111] == 3);          // full set
        CHECK(f1.table[0b0110] == 2);          // {2,3}: max(v(2), v(3)) = 2
        CHECK(f1.table[0b1100] == 3);          // {3,4}: v(4) = 3
        SetPolymorphism f2 = impossible_witness_table(3, 2);
        CHECK(f2.ground == 3);
        CHECK(f2.table[0] == 2);
        CHECK(f2.table[0b001] == 1);
        CHECK(f2.table[0b111] == 3);
    }
    SUBCASE("certification checks the partition property with an independent route") {
        // witness tables must also pass the brute ordered-partition filter
        SetPolymorphism f2 = impossible_witness_table(3, 2);
        auto brute = oracle::brute_set_polymorphisms(4, 3, 3);
        bool found = false;
        for (const auto& t : brute) found = found || (t == f2.table);
        CHECK(found);
    }
}

TEST_CASE("restriction minion homomorphism") {
    SUBCASE("unary-only quick check") {
        RestrictionReport rep = verify_restriction_hom(2, 3, 3, 1);
        REQUIRE(rep.status == Status::Done);
        CHECK(rep.holds);
        CHECK(rep.checked_functions > 0);
    }
    SUBCASE("budget is reported") {
        RestrictionReport rep = verify_restriction_hom(2, 3, 3, 3, 1000);
        CHECK(rep.status == Status::Budget);
    }
}

TEST_CASE("selector property") {
    SUBCASE("tiny case") {
        SelectorReport rep = selector_check(4, 2, 2);
        REQUIRE(rep.status == Status::Done);
        CHECK(rep.holds);
    }
    SUBCASE("r = 5, k = 3, ground sizes up to 3") {
        SelectorReport rep = selector_check(5, 3, 3);
        REQUIRE(rep.status == Status::Done);
        CHECK(rep.holds);
        CHECK(rep.checked_functions > 0);
    }
    CHECK_THROWS_AS(selector_check(4, 3, 3), std::invalid_argument);
}

TEST_CASE("intersecting edge families are stars or triangles") {
    // build random pairwise-intersecting families on <= 8 vertices, then
    // classify mechanically
    lohg::Rng rng(21);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(6));
        std::vector<std::pair<int, int>> all;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) all.emplace_back(a, b);
        std::vector<std::pair<int, int>> family;
        for (int t = 0; t < 12; ++t) {
            auto e = all[rng.below(all.size())];
            bool ok = true;
            for (auto f : family)
                if (e.first != f.first && e.first != f.second && e.second != f.first &&
                    e.second != f.second)
                    ok = false;
            if (ok && std::find(family.begin(), family.end(), e) == family.end())
                family.push_back(e);
        }
        if (family.size() < 2) continue;
        // star: some vertex covers every edge
        bool star = false;
        for (int v = 1; v <= n; ++v) {
            bool all_hit = true;
            for (auto e : family) all_hit = all_hit && (e.first == v || e.second == v);
            star = star || all_hit;
        }
        // triangle: exactly three edges on three vertices
        bool triangle = false;
        if (family.size() == 3) {
            std::set<int> verts;
            for (auto e : family) {
                verts.insert(e.first);
                verts.insert(e.second);
            }
            triangle = verts.size() == 3;
        }
        CHECK((star || triangle));
    }
}

TEST_CASE("small graphs with k+3 vertices and 3k edges have an independent 2-set") {
    lohg::Rng rng(33);
    for (int k = 3; k <= 8; ++k) {
        for (int trial = 0; trial < 30; ++trial) {
            const int n = k + 3;
            std::set<std::pair<int, int>> edges;
            while (static_cast<int>(edges.size()) < 3 * k) {
                int a = static_cast<int>(rng.below(n));
                int b = static_cast<int>(rng.below(n));
                if (a == b) continue;
                edges.insert({std::min(a, b), std::max(a, b)});
            }
            bool found = false;
            for (int a = 0; a < n && !found; ++a)
                for (int b = a + 1; b < n && !found; ++b)
                    if (!edges.contains({a, b})) found = true;
            CHECK(found);
        }
    }
}
