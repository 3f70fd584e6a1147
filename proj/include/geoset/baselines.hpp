#pragma once

#include <optional>

#include "geoset/feasibility.hpp"

namespace geoset {

// Greedy baselines: repeatedly take the object covering the most still-missing
// elements, ties by lowest index. Throws InfeasibleInstance when stuck.
std::vector<std::size_t> greedy_dominating_set(const DominationInstance& instance);
std::vector<std::size_t> greedy_set_cover(const CoverInstance& instance);

struct OracleBudget {
    std::size_t max_n = 24;                   // refuse larger instances outright
    std::size_t max_nodes = 10'000'000;       // total search nodes, both phases
    std::optional<double> time_limit_ms;      // wall-clock, checked periodically
};

struct OracleResult {
    std::vector<std::size_t> indices;  // lexicographically least optimal set
    std::size_t optimum = 0;
    std::size_t nodes = 0;             // search nodes expanded
};

// Exact optimum via branch and bound. Phase one establishes the minimum
// cardinality (greedy incumbent, lower bounds from element packing and
// best-object coverage, branching on an uncovered element with earlier
// coverers forbidden in later branches). Phase two re-enumerates at that
// cardinality in lexicographic order and returns the first feasible set.
// Throws BudgetExceeded when any budget is hit, InfeasibleInstance when even
// the full object set is infeasible.
OracleResult exact_minimum_selection(const SetSystem& system, const OracleBudget& budget = {});

OracleResult exact_min_dominating_set(const DominationInstance& instance,
                                      const OracleBudget& budget = {});
OracleResult exact_min_set_cover(const CoverInstance& instance, const OracleBudget& budget = {});

}  // namespace geoset
