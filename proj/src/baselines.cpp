#include "geoset/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "geoset/errors.hpp"
#include "geoset/solver.hpp"

namespace geoset {

namespace {

struct SearchState {
    const SetSystem& system;
    const OracleBudget& budget;
    std::chrono::steady_clock::time_point start;
    std::size_t nodes = 0;
    std::size_t best_size = 0;

    void tick() {
        ++nodes;
        if (nodes > budget.max_nodes) {
            throw BudgetExceeded("search exceeded " + std::to_string(budget.max_nodes) +
                                 " nodes");
        }
        if (budget.time_limit_ms.has_value() && nodes % 4096 == 0) check_time();
    }

    void check_time() const {
        if (!budget.time_limit_ms.has_value()) return;
        const auto elapsed = std::chrono::steady_clock::now() - start;
        if (std::chrono::duration<double, std::milli>(elapsed).count() > *budget.time_limit_ms) {
            throw BudgetExceeded("search exceeded the time limit");
        }
    }
};

// Lower bound: greedily pick uncovered elements no allowed object covers two
// of; each needs its own object. Returns num_objects + 1 when some picked
// element has no allowed coverer at all (dead subtree).
std::size_t packing_lower_bound(const SetSystem& system, const Bitset& covered,
                                const Bitset& forbidden) {
    std::size_t lb = 0;
    Bitset blocked = covered;
    for (std::size_t e = 0; e < system.num_elements; ++e) {
        if (blocked.test(e)) continue;
        const Bitset allowed = system.element_covered_by[e] - forbidden;
        if (allowed.none()) return system.num_objects + 1;
        ++lb;
        for (std::size_t o = allowed.find_first(); o != Bitset::npos; o = allowed.find_next(o)) {
            blocked |= system.object_covers[o];
        }
    }
    return lb;
}

// Lower bound: remaining elements divided by the best single allowed object.
std::size_t ratio_lower_bound(const SetSystem& system, const Bitset& covered,
                              const Bitset& forbidden) {
    const std::size_t uncovered = system.num_elements - covered.count();
    if (uncovered == 0) return 0;
    std::size_t best = 0;
    for (std::size_t o = 0; o < system.num_objects; ++o) {
        if (forbidden.test(o)) continue;
        best = std::max(best, (system.object_covers[o] - covered).count());
    }
    if (best == 0) return system.num_objects + 1;
    return (uncovered + best - 1) / best;
}

// Phase one: establish the minimum cardinality. Branches on the uncovered
// element with the fewest allowed coverers; within a branch point, earlier
// coverers are forbidden in later branches (any cover using one was already
// explored there), which keeps the search complete without repetition.
void dfs_optimum(SearchState& st, const Bitset& covered, const Bitset& forbidden,
                 std::size_t count) {
    st.tick();
    if (covered.count() == st.system.num_elements) {
        st.best_size = std::min(st.best_size, count);
        return;
    }
    const std::size_t lb =
        std::max(packing_lower_bound(st.system, covered, forbidden),
                 ratio_lower_bound(st.system, covered, forbidden));
    if (count + lb >= st.best_size) return;

    std::size_t branch_elem = st.system.num_elements;
    std::size_t branch_width = st.system.num_objects + 1;
    for (std::size_t e = 0; e < st.system.num_elements; ++e) {
        if (covered.test(e)) continue;
        const std::size_t width = (st.system.element_covered_by[e] - forbidden).count();
        if (width < branch_width) {
            branch_width = width;
            branch_elem = e;
        }
    }
    if (branch_width == 0) return;

    const Bitset coverers = st.system.element_covered_by[branch_elem] - forbidden;
    Bitset forbid = forbidden;
    for (std::size_t o = coverers.find_first(); o != Bitset::npos; o = coverers.find_next(o)) {
        dfs_optimum(st, covered | st.system.object_covers[o], forbid, count + 1);
        forbid.set(o);
    }
}

// Phase two: first feasible set of exactly `remaining` further objects with
// indices >= next, scanning in index order; the prunes only discard subtrees
// with no feasible completion, so the first hit is the lexicographic minimum.
bool dfs_lexicographic(SearchState& st, std::size_t next, const Bitset& covered,
                       std::size_t remaining, const std::vector<Bitset>& suffix_union,
                       const std::vector<Bitset>& prefix_mask,
                       std::vector<std::size_t>& chosen) {
    st.tick();
    if (remaining == 0) return covered.count() == st.system.num_elements;
    const std::size_t n = st.system.num_objects;
    for (std::size_t o = next; o + remaining <= n; ++o) {
        const Bitset covered_next = covered | st.system.object_covers[o];
        Bitset missing = covered_next;
        missing |= suffix_union[o + 1];
        if (missing.count() != st.system.num_elements) continue;
        if (packing_lower_bound(st.system, covered_next, prefix_mask[o + 1]) > remaining - 1) {
            continue;
        }
        chosen.push_back(o);
        if (dfs_lexicographic(st, o + 1, covered_next, remaining - 1, suffix_union,
                              prefix_mask, chosen)) {
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

}  // namespace

OracleResult exact_minimum_selection(const SetSystem& system, const OracleBudget& budget) {
    const std::size_t n = system.num_objects;
    const std::size_t m = system.num_elements;
    if (n > budget.max_n) {
        throw BudgetExceeded("instance has " + std::to_string(n) +
                             " objects, above the oracle limit of " +
                             std::to_string(budget.max_n));
    }
    OracleResult result;
    if (m == 0) return result;
    if (!system.full_set_feasible()) {
        throw InfeasibleInstance("full object set does not cover every element");
    }

    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const std::vector<std::size_t> incumbent = greedy_selection(system, all);

    SearchState st{system, budget, std::chrono::steady_clock::now(), 0, incumbent.size()};
    dfs_optimum(st, Bitset(m), Bitset(n), 0);
    st.check_time();

    std::vector<Bitset> suffix_union(n + 1, Bitset(m));
    for (std::size_t i = n; i-- > 0;) {
        suffix_union[i] = suffix_union[i + 1] | system.object_covers[i];
    }
    std::vector<Bitset> prefix_mask(n + 1, Bitset(n));
    for (std::size_t i = 1; i <= n; ++i) {
        prefix_mask[i] = prefix_mask[i - 1];
        prefix_mask[i].set(i - 1);
    }

    std::vector<std::size_t> chosen;
    if (!dfs_lexicographic(st, 0, Bitset(m), st.best_size, suffix_union, prefix_mask, chosen)) {
        throw InvariantViolation("no set found at the proven optimal cardinality");
    }
    result.indices = chosen;
    result.optimum = st.best_size;
    result.nodes = st.nodes;
    return result;
}

std::vector<std::size_t> greedy_dominating_set(const DominationInstance& instance) {
    const IntersectionGraph graph = build_graph(instance);
    const SetSystem system = domination_system(graph);
    std::vector<std::size_t> all(system.num_objects);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return greedy_selection(system, all);
}

std::vector<std::size_t> greedy_set_cover(const CoverInstance& instance) {
    const SetSystem system = cover_system(instance);
    std::vector<std::size_t> all(system.num_objects);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return greedy_selection(system, all);
}

OracleResult exact_min_dominating_set(const DominationInstance& instance,
                                      const OracleBudget& budget) {
    const IntersectionGraph graph = build_graph(instance);
    return exact_minimum_selection(domination_system(graph), budget);
}

OracleResult exact_min_set_cover(const CoverInstance& instance, const OracleBudget& budget) {
    return exact_minimum_selection(cover_system(instance), budget);
}

}  // namespace geoset
