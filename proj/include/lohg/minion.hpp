#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace lohg::minion {

// ---------------------------------------------------------------------------
// Templates and tuple-representation polymorphisms
// ---------------------------------------------------------------------------

// Single-relation structure: domain [1, domain_size], relation an explicit
// list of arity-tuples.
struct Template {
    int domain_size = 0;
    int arity = 0;
    std::vector<std::vector<int>> relation;
};

// LO_k^r: all tuples of [k]^r whose value multiset has a unique maximum.
Template lo_template(int k, int r);

// Total function [dom]^arity -> [cod], table in row-major order (last
// argument varies fastest).
struct TupleFunction {
    int dom = 0;
    int cod = 0;
    int arity = 0;
    std::vector<int> table;

    int eval(const std::vector<int>& args) const;
};

// True iff applying f to the rows of every matrix whose columns lie in
// a.relation yields a tuple of b.relation.
bool is_polymorphism(const TupleFunction& f, const Template& a, const Template& b);

// f_pi(x_1..x_q) = f(x_{pi(1)}, ..., x_{pi(p)}); pi is 1-indexed into [q].
TupleFunction minor(const TupleFunction& f, const std::vector<int>& pi, int q);

// ---------------------------------------------------------------------------
// Set representation of Pol(LO_2^r, LO_k^r)
// ---------------------------------------------------------------------------

// A polymorphism of LO_2-source templates viewed as a map from subsets of
// [n] (positions of the 2s) to [k]: table[mask] for each of the 2^n subsets.
// Membership in the minion of uniformity r means every ordered partition of
// [n] into r possibly-empty parts has a unique maximum among its part values.
struct SetPolymorphism {
    int ground = 0;  // n
    int colours = 0; // k
    std::vector<std::uint8_t> table; // size 1 << ground, values in [1, k]

    bool operator==(const SetPolymorphism& o) const = default;
    bool operator<(const SetPolymorphism& o) const { return table < o.table; }
};

// Checks the partition property of f for uniformity r.
bool satisfies_partition_property(const SetPolymorphism& f, int r);

// g(S) = f(pi^{-1}(S)) for pi : [p] -> [q] (1-indexed values in pi).
SetPolymorphism minor(const SetPolymorphism& f, const std::vector<int>& pi, int q);

// Exploration caps. Exceeding any cap yields a distinct Budget outcome,
// never a refutation.
struct Budget {
    std::uint64_t max_nodes = 20'000'000;
    std::uint64_t max_items = 120'000;
};

enum class Status { Done, Budget };

struct EnumResult {
    Status status = Status::Done;
    std::vector<SetPolymorphism> items; // DFS order: subsets by (size, lex)
    std::uint64_t nodes = 0;
};

// All f : 2^[n] -> [k] whose every ordered partition of [n] into r
// possibly-empty parts has a unique maximum. DFS assigns table entries in
// (size, lex) subset order and prunes with fully-assigned partitions.
EnumResult enumerate_set_polymorphisms(int r, int k, int n, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Free structures and homomorphisms
// ---------------------------------------------------------------------------

// F_M(LO_2^r_rel) for M = the set-polymorphism minion of uniformity r_src:
// domain = binary elements, relation = tuples (f_1, ..., f_r_rel) of the
// binary minors of arity-r_rel elements f, where minor i sends coordinate i
// to the second argument.
struct FreeStructure {
    int arity = 0;
    std::vector<SetPolymorphism> domain;         // sorted, deduplicated
    std::vector<std::vector<int>> relation;      // index tuples, deduplicated
};

struct FreeResult {
    Status status = Status::Done;
    FreeStructure fs;
    std::uint64_t enumerated = 0;
};

FreeResult free_structure_lo2(int r_src, int k, int r_rel, const Budget& budget = {});

enum class HomStatus { Found, None, Budget };

struct HomResult {
    HomStatus status = HomStatus::None;
    std::vector<int> map; // element index -> target value, when Found
    std::uint64_t nodes = 0;
};

// Complete backtracking search for a homomorphism from an (abstract) finite
// structure to a template: variables in descending tuple-occurrence order,
// forward checking over the target relation.
HomResult find_homomorphism(std::size_t domain_size,
                            const std::vector<std::vector<int>>& relation,
                            const Template& target,
                            const Budget& budget = {});

HomResult find_homomorphism(const FreeStructure& s, const Template& target,
                            const Budget& budget = {});
HomResult find_homomorphism(const Template& s, const Template& target,
                            const Budget& budget = {});

// ---------------------------------------------------------------------------
// Minion homomorphism existence for LO templates
// ---------------------------------------------------------------------------

enum class MinionHomStatus { Exists, NotExists, Budget };

struct MinionHomResult {
    MinionHomStatus status = MinionHomStatus::Budget;
    std::vector<int> omega;   // domain index -> colour, when Exists
    std::uint64_t nodes = 0;
    std::size_t domain_size = 0;
    std::size_t constraints = 0;
    bool cross_checked = false; // direct omega search agreed with hom search
};

// Decides M_{2,k}^{r_src} -> M_{2,k}^{r_dst} by searching for a
// homomorphism F_M(LO_2^{r_dst}) -> LO_k^{r_dst}; a second, independent
// search over omega assignments cross-checks the outcome.
MinionHomResult check_minion_hom_lo(int r_src, int r_dst, int k, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Edge co-colourings
// ---------------------------------------------------------------------------

// Edge colouring of K_m in which no p pairwise vertex-disjoint edges share a
// colour. edge_colour is indexed by lexicographic edge order of K_m.
struct CoColouring {
    int m = 0;
    int k = 0;
    int p = 0;
    std::vector<int> edge_colour;
};

bool verify_co_colouring(const CoColouring& c);

enum class CoColStatus { Found, None, Budget };

struct CoColResult {
    CoColStatus status = CoColStatus::None;
    std::optional<CoColouring> table;
    std::uint64_t nodes = 0;
};

// Exhaustive search with symmetry breaking (first edge gets colour 1, colour
// c may appear only after c-1) over a disjointness-greedy edge order.
CoColResult co_colouring_search(int m, int k, int p, const Budget& budget = {});

// The explicit colouring of K_{k+2} with edge {x, y} -> max(x, y, 3).
CoColouring max_xy3_cocolouring(int k);

// ---------------------------------------------------------------------------
// Explicit certifications
// ---------------------------------------------------------------------------

// Builds the explicit witness table and certifies the corresponding
// nonexistence of a minion homomorphism:
//   variant 1 (M_{2,k}^k -/-> M_{2,k}^{k+1}): f on 2^[k+1], empty set and
//     singletons -> 1, co-singletons and the full set -> k, other S ->
//     max over S of max(2, x-1); partition property for k parts.
//   variant 2 (M_{2,k}^{k+1} -/-> M_{2,k}^k): f on 2^[k], singletons -> 1,
//     empty set -> 2, co-singletons and the full set -> k, other S ->
//     max over S of max(3, x); partition property for k+1 parts.
// True iff the table satisfies the partition property and all its binary
// minors are equal.
bool verify_impossible_witness(int k, int variant);
SetPolymorphism impossible_witness_table(int k, int variant);

// Checks that restriction to [l]^p maps Pol(LO_{l+1}^r, LO_{k+1}^r) into
// Pol(LO_l^r, LO_k^r) and commutes with minors, exhaustively over all
// polymorphisms of arity <= max_arity and all maps between such arities.
struct RestrictionReport {
    Status status = Status::Done;
    bool holds = false;
    std::size_t checked_functions = 0;
    std::size_t checked_minors = 0;
};

RestrictionReport verify_restriction_hom(int l, int k, int r, int max_arity,
                                         std::uint64_t candidate_budget = 100'000'000);

// Selector property: for every enumerated f of ground size <= max_n (with
// r >= max_n + 2), the singleton values have a unique maximum, and whenever
// a partition's unique maximum value equals the singleton maximum value, the
// argmax singleton's element lies in the argmax part.
struct SelectorReport {
    Status status = Status::Done;
    bool holds = false;
    std::size_t checked_functions = 0;
};

SelectorReport selector_check(int r, int k, int max_n, const Budget& budget = {});

} // namespace lohg::minion
