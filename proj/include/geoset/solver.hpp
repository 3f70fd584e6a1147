#pragma once

#include <optional>
#include <utility>

#include "geoset/feasibility.hpp"

namespace geoset {

enum class InitKind { Greedy, FullSet };

struct SolverConfig {
    // Swap size: explicit b wins; otherwise b = ceil(alpha / epsilon^2),
    // clamped to at most 4 (derived values only). Defaults to b = 1.
    std::optional<std::size_t> b;
    std::optional<Rational> epsilon;
    Rational alpha = 1;
    InitKind init = InitKind::Greedy;
    // Safety caps. The first loop strictly shrinks the solution, so it ends
    // within |initial| iterations on its own; the second loop's quadratic cap
    // guards the replacement cycle.
    std::size_t max_first_loop_iters = static_cast<std::size_t>(-1);
    std::size_t second_loop_cap_factor = 4;  // cap = factor * n^2
    bool timing = false;                     // record wall time in meta
};

struct ResolvedB {
    std::size_t b = 1;
    bool capped = false;  // a derived value hit the hard cap of 4
};

// Throws InvalidParams for b = 0 or epsilon <= 0.
ResolvedB resolve_b(const SolverConfig& config);

// One combinatorial problem, either flavor, ready for the solver: expanded
// polygons, the element-coverage system, and the deduplicated candidate
// object indices (exact duplicate polygons keep only their lowest index, so
// the replacement loop cannot cycle through clones).
struct ProblemInstance {
    std::vector<ConvexPolygon> polygons;
    SetSystem system;
    std::vector<std::size_t> candidates;
    bool is_domination = false;
};

ProblemInstance make_problem(const Instance& instance);

struct SwapRecord {
    int loop = 1;                      // 1 = b-swap loop, 2 = containment loop
    std::vector<std::size_t> removed;  // X
    std::vector<std::size_t> added;    // X' (empty for pure removals)
    std::size_t witness_size = 0;      // solution size after applying
};

struct SwapTrace {
    std::vector<SwapRecord> entries;
    std::size_t rounds = 1;
    // True when a containment replacement re-enabled a b-swap, forcing
    // another alternation round.
    bool extra_rounds = false;
};

// Feasible start: greedy (max new coverage, ties by lowest index) or the full
// candidate set. Throws InfeasibleInstance when even the full set fails.
Solution initial_solution(const ProblemInstance& problem, const SolverConfig& config);

// Greedy selection over an arbitrary coverage system; shared by the solver
// initialization and the greedy baselines.
std::vector<std::size_t> greedy_selection(const SetSystem& system,
                                          const std::vector<std::size_t>& candidates);

// The canonically first improving swap: remove X (subsets of the solution by
// size 1..b, then lexicographic), add X' (size 0..|X|-1, lexicographic over
// non-selected candidates), such that the result stays feasible. Absent iff
// the solution is b-locally optimal.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> improving_swap(
    const ProblemInstance& problem, const std::vector<std::size_t>& selected, std::size_t b);

// Repeatedly replaces the lowest-index selected Q whose cover-free region is
// contained in some lowest-index non-selected R. Cardinality-preserving.
// Throws IterationCapExceeded past cap iterations.
std::vector<std::size_t> containment_replacement(const ProblemInstance& problem,
                                                 std::vector<std::size_t> selected,
                                                 std::size_t cap, SwapTrace* trace = nullptr);

// Full local search: alternates the b-swap loop and the containment loop
// until neither changes the solution.
std::pair<Solution, SwapTrace> local_search(const ProblemInstance& problem,
                                            const SolverConfig& config);

// Independent b-local-optimality check: exhaustive unpruned re-enumeration,
// deliberately sharing no enumeration code with improving_swap.
bool audit_b_local_optimality(const ProblemInstance& problem,
                              const std::vector<std::size_t>& selected, std::size_t b);

}  // namespace geoset
