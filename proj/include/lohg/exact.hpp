#pragma once

#include <cstdint>
#include <optional>

#include "lohg/hypergraph.hpp"

namespace lohg {

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t backtracks = 0;
    double wall_ms = 0.0;
};

enum class ExactStatus { Found, Unsatisfiable, BudgetExceeded };

struct ExactResult {
    ExactStatus status = ExactStatus::BudgetExceeded;
    std::optional<Colouring> colouring;
    SearchStats stats;
};

// Complete backtracking search for an LO k-colouring. Variable order: max
// degree first (ties by id); values ascending. An edge prunes as soon as its
// colour multiset is complete with a duplicated maximum. Unsatisfiable is
// only reported after exhaustive refutation; running out of budget is a
// distinct outcome.
ExactResult exact_lo_colour(const Hypergraph& h, int k, std::uint64_t node_budget = 50'000'000);

bool is_lo2_colourable(const Hypergraph& h, std::uint64_t node_budget = 50'000'000);

} // namespace lohg
