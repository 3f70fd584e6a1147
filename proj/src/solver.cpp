#include "geoset/solver.hpp"

#include <algorithm>
#include <chrono>

#include "geoset/errors.hpp"
#include "geoset/region.hpp"

namespace geoset {

namespace {

// Lexicographic combination step over positions 0..n-1; pos holds k strictly
// increasing indices. Returns false once the last combination has been seen.
bool next_combination(std::vector<std::size_t>& pos, std::size_t n) {
    const std::size_t k = pos.size();
    if (k == 0 || k > n) return false;
    std::size_t i = k;
    while (i-- > 0) {
        if (pos[i] + 1 <= n - k + i) {
            ++pos[i];
            for (std::size_t j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[i] = i;
    return pos;
}

std::vector<std::size_t> pick(const std::vector<std::size_t>& pool,
                              const std::vector<std::size_t>& pos) {
    std::vector<std::size_t> out;
    out.reserve(pos.size());
    for (std::size_t p : pos) out.push_back(pool[p]);
    return out;
}

std::vector<std::size_t> sorted_union_minus(const std::vector<std::size_t>& selected,
                                            const std::vector<std::size_t>& removed,
                                            const std::vector<std::size_t>& added) {
    std::vector<std::size_t> out;
    out.reserve(selected.size() + added.size());
    for (std::size_t s : selected) {
        if (std::find(removed.begin(), removed.end(), s) == removed.end()) out.push_back(s);
    }
    out.insert(out.end(), added.begin(), added.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

ResolvedB resolve_b(const SolverConfig& config) {
    if (config.b.has_value()) {
        if (*config.b == 0) throw InvalidParams("swap size b must be at least 1");
        return {*config.b, false};
    }
    if (config.epsilon.has_value()) {
        if (config.alpha <= 0) throw InvalidParams("alpha must be positive");
        if (*config.epsilon <= 0) throw InvalidParams("epsilon must be positive");
        const Rational ratio = config.alpha / (*config.epsilon * *config.epsilon);
        long derived = ceil_to_long(ratio);
        if (derived < 1) derived = 1;
        if (derived > 4) return {4, true};
        return {static_cast<std::size_t>(derived), false};
    }
    return {1, false};
}

ProblemInstance make_problem(const Instance& instance) {
    ProblemInstance problem;
    problem.polygons = instance_polygons(instance);
    if (std::holds_alternative<DominationInstance>(instance)) {
        problem.is_domination = true;
        IntersectionGraph graph = build_graph(std::get<DominationInstance>(instance));
        problem.system = domination_system(graph);
    } else {
        problem.is_domination = false;
        problem.system = cover_system(std::get<CoverInstance>(instance));
    }
    // Exact duplicate polygons collapse to their lowest index: clones cover
    // identical element sets, so dropping them changes no optimum and keeps
    // the replacement loop from cycling through copies.
    const std::size_t n = problem.polygons.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool duplicate = false;
        for (std::size_t j = 0; j < i; ++j) {
            if (problem.polygons[i] == problem.polygons[j]) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) problem.candidates.push_back(i);
    }
    return problem;
}

std::vector<std::size_t> greedy_selection(const SetSystem& system,
                                          const std::vector<std::size_t>& candidates) {
    const std::size_t m = system.num_elements;
    Bitset covered(m);
    std::vector<std::size_t> out;
    while (covered.count() < m) {
        std::size_t best = system.num_objects;
        std::size_t best_gain = 0;
        for (std::size_t c : candidates) {
            const std::size_t gain = (system.object_covers[c] - covered).count();
            if (gain > best_gain) {  // strict: ties keep the earlier (lower) index
                best_gain = gain;
                best = c;
            }
        }
        if (best_gain == 0) throw InfeasibleInstance("no object covers a remaining element");
        covered |= system.object_covers[best];
        out.push_back(best);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Solution initial_solution(const ProblemInstance& problem, const SolverConfig& config) {
    Solution solution;
    if (config.init == InitKind::Greedy) {
        solution.indices = greedy_selection(problem.system, problem.candidates);
        solution.meta.solver = "greedy";
    } else {
        if (!problem.system.feasible(problem.candidates)) {
            throw InfeasibleInstance("full object set does not cover every element");
        }
        solution.indices = problem.candidates;
        solution.meta.solver = "full-set";
    }
    return solution;
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> improving_swap(
    const ProblemInstance& problem, const std::vector<std::size_t>& selected, std::size_t b) {
    if (b == 0) throw InvalidParams("swap size b must be at least 1");
    const SetSystem& system = problem.system;
    const std::size_t m = system.num_elements;

    std::vector<std::size_t> sel = normalize_indices(selected, system.num_objects);
    if (!system.feasible(sel)) {
        throw InvariantViolation("improving_swap requires a feasible solution");
    }

    // Per-element count of selected objects covering it.
    std::vector<std::size_t> cnt(m, 0);
    for (std::size_t s : sel) {
        const Bitset& cov = system.object_covers[s];
        for (std::size_t e = cov.find_first(); e != Bitset::npos; e = cov.find_next(e)) ++cnt[e];
    }

    std::vector<bool> in_sel(system.num_objects, false);
    for (std::size_t s : sel) in_sel[s] = true;

    const std::size_t max_x = std::min(b, sel.size());
    for (std::size_t xs = 1; xs <= max_x; ++xs) {
        std::vector<std::size_t> pos = first_combination(xs);
        do {
            const std::vector<std::size_t> X = pick(sel, pos);

            // Elements that lose all selected coverage when X leaves.
            Bitset union_x(m);
            for (std::size_t x : X) union_x |= system.object_covers[x];
            Bitset exposed(m);
            for (std::size_t e = union_x.find_first(); e != Bitset::npos;
                 e = union_x.find_next(e)) {
                std::size_t in_x = 0;
                for (std::size_t x : X) {
                    if (system.object_covers[x].test(e)) ++in_x;
                }
                if (in_x == cnt[e]) exposed.set(e);
            }

            if (exposed.none()) return std::make_pair(X, std::vector<std::size_t>{});

            // Replacement pool: non-selected candidates touching the exposed
            // elements. Any canonically-first X' consists solely of such
            // objects (a useless member could be dropped, and the smaller set
            // precedes it), so pruning preserves the enumeration's answer.
            std::vector<std::size_t> pool;
            for (std::size_t c : problem.candidates) {
                if (!in_sel[c] && system.object_covers[c].intersects(exposed)) pool.push_back(c);
            }

            const std::size_t max_add = std::min(xs - 1, pool.size());
            for (std::size_t as = 1; as <= max_add; ++as) {
                std::vector<std::size_t> apos = first_combination(as);
                do {
                    Bitset acc(m);
                    for (std::size_t p : apos) acc |= system.object_covers[pool[p]];
                    if (exposed.is_subset_of(acc)) {
                        return std::make_pair(X, pick(pool, apos));
                    }
                } while (next_combination(apos, pool.size()));
            }
        } while (next_combination(pos, sel.size()));
    }
    return std::nullopt;
}

std::vector<std::size_t> containment_replacement(const ProblemInstance& problem,
                                                 std::vector<std::size_t> selected,
                                                 std::size_t cap, SwapTrace* trace) {
    selected = normalize_indices(selected, problem.system.num_objects);
    std::size_t iters = 0;
    while (true) {
        bool applied = false;
        for (std::size_t qi = 0; qi < selected.size() && !applied; ++qi) {
            const std::size_t q = selected[qi];
            const Region cf = cover_free_region(q, selected, problem.polygons);
            for (std::size_t r : problem.candidates) {
                if (std::binary_search(selected.begin(), selected.end(), r)) continue;
                if (!region_contained_in(cf, problem.polygons[r])) continue;
                if (iters == cap) {
                    throw IterationCapExceeded("containment replacement exceeded " +
                                               std::to_string(cap) + " iterations");
                }
                ++iters;
                selected.erase(selected.begin() + static_cast<std::ptrdiff_t>(qi));
                selected.insert(
                    std::upper_bound(selected.begin(), selected.end(), r), r);
                if (!problem.system.feasible(selected)) {
                    throw InvariantViolation(
                        "containment replacement broke feasibility");
                }
                if (trace != nullptr) {
                    trace->entries.push_back(SwapRecord{2, {q}, {r}, selected.size()});
                }
                applied = true;
                break;
            }
        }
        if (!applied) return selected;
    }
}

std::pair<Solution, SwapTrace> local_search(const ProblemInstance& problem,
                                            const SolverConfig& config) {
    const auto start_time = std::chrono::steady_clock::now();
    const ResolvedB rb = resolve_b(config);
    const std::size_t n = problem.system.num_objects;
    const std::size_t cap = config.second_loop_cap_factor * n * n;

    Solution solution = initial_solution(problem, config);
    SwapTrace trace;

    std::size_t rounds = 0;
    while (true) {
        ++rounds;
        // First loop: b-swaps until b-locally optimal. Every applied swap
        // strictly shrinks the solution, so this terminates on its own.
        std::size_t first_iters = 0;
        while (auto swap = improving_swap(problem, solution.indices, rb.b)) {
            if (first_iters == config.max_first_loop_iters) {
                throw IterationCapExceeded("b-swap loop exceeded iteration cap");
            }
            ++first_iters;
            const auto& [removed, added] = *swap;
            solution.indices = sorted_union_minus(solution.indices, removed, added);
            if (!problem.system.feasible(solution.indices)) {
                throw InvariantViolation("b-swap broke feasibility");
            }
            trace.entries.push_back(SwapRecord{1, removed, added, solution.indices.size()});
        }
        // Second loop: cardinality-preserving containment replacements.
        const std::vector<std::size_t> before = solution.indices;
        solution.indices = containment_replacement(problem, solution.indices, cap, &trace);
        if (solution.indices == before) break;
    }
    trace.rounds = rounds;
    trace.extra_rounds = rounds > 1;

    solution.meta.solver = "local-search";
    solution.meta.parameters.emplace_back("b", std::to_string(rb.b));
    if (config.epsilon.has_value()) {
        solution.meta.parameters.emplace_back("epsilon", to_string(*config.epsilon));
        solution.meta.parameters.emplace_back("alpha", to_string(config.alpha));
        if (rb.capped) solution.meta.parameters.emplace_back("b_capped", "true");
    }
    solution.meta.parameters.emplace_back(
        "init", config.init == InitKind::Greedy ? "greedy" : "full-set");
    solution.meta.swap_count = trace.entries.size();
    if (config.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - start_time;
        solution.meta.wall_time_ms =
            std::chrono::duration<double, std::milli>(elapsed).count();
    }
    return {solution, trace};
}

namespace {

// Recursive, unpruned search for any feasible strictly-smaller swap; kept
// structurally independent from improving_swap on purpose.
bool audit_find_addition(const SetSystem& system, const std::vector<std::size_t>& base,
                         const std::vector<std::size_t>& others, std::size_t want,
                         std::size_t from, std::vector<std::size_t>& chosen) {
    if (chosen.size() == want) {
        std::vector<std::size_t> candidate = base;
        candidate.insert(candidate.end(), chosen.begin(), chosen.end());
        return system.feasible(candidate);
    }
    for (std::size_t i = from; i < others.size(); ++i) {
        chosen.push_back(others[i]);
        if (audit_find_addition(system, base, others, want, i + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

bool audit_find_removal(const SetSystem& system, const std::vector<std::size_t>& selected,
                        const std::vector<std::size_t>& others, std::size_t want,
                        std::size_t from, std::vector<std::size_t>& removal) {
    if (removal.size() == want) {
        std::vector<std::size_t> base;
        for (std::size_t s : selected) {
            if (std::find(removal.begin(), removal.end(), s) == removal.end()) {
                base.push_back(s);
            }
        }
        for (std::size_t add = 0; add < want; ++add) {
            std::vector<std::size_t> chosen;
            if (audit_find_addition(system, base, others, add, 0, chosen)) return true;
        }
        return false;
    }
    for (std::size_t i = from; i < selected.size(); ++i) {
        removal.push_back(selected[i]);
        if (audit_find_removal(system, selected, others, want, i + 1, removal)) return true;
        removal.pop_back();
    }
    return false;
}

}  // namespace

bool audit_b_local_optimality(const ProblemInstance& problem,
                              const std::vector<std::size_t>& selected, std::size_t b) {
    if (b == 0) throw InvalidParams("swap size b must be at least 1");
    std::vector<std::size_t> sel = normalize_indices(selected, problem.system.num_objects);
    if (!problem.system.feasible(sel)) return false;

    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < problem.system.num_objects; ++i) {
        if (!std::binary_search(sel.begin(), sel.end(), i)) others.push_back(i);
    }
    for (std::size_t xs = 1; xs <= std::min(b, sel.size()); ++xs) {
        std::vector<std::size_t> removal;
        if (audit_find_removal(problem.system, sel, others, xs, 0, removal)) return false;
    }
    return true;
}

}  // namespace geoset
