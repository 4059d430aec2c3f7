#pragma once

#include <cstdint>
#include <vector>

#include "lohg/graph.hpp"

namespace lohg {

// Min-degree greedy: repeatedly pick a minimum-degree vertex and delete its
// closed neighbourhood. Attains the Turan bound |IS| >= n / (avg degree + 1).
std::vector<std::uint32_t> greedy_is(const Graph& g);

// Ramsey-type clique removal: Ramsey(G) returns a clique and an independent
// set; cliques are removed round by round and the best independent set is
// kept. Rounds after the first stop once the visit budget is exhausted or no
// remaining vertex set can beat the incumbent.
std::vector<std::uint32_t> clique_removal_is(const Graph& g);

// The larger of greedy_is and clique_removal_is (ties go to greedy).
std::vector<std::uint32_t> best_is(const Graph& g);

} // namespace lohg
