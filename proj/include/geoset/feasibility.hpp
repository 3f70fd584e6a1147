#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geoset/instances.hpp"
#include "geoset/region.hpp"

namespace geoset {

using Bitset = boost::dynamic_bitset<>;

// Closed-set intersection graph over object indices: objects are adjacent
// when they share at least one point (a boundary touch counts).
struct IntersectionGraph {
    std::size_t n = 0;
    // closed_neighborhood[i] has bit i set plus every j with touches(P_i, P_j).
    std::vector<Bitset> closed_neighborhood;

    bool adjacent(std::size_t i, std::size_t j) const {
        return i != j && closed_neighborhood[i].test(j);
    }
};

IntersectionGraph build_graph(const std::vector<ConvexPolygon>& polys);
// Homothet fast path: all objects share the base's edge-normal axes, so each
// pair test compares cached per-axis projection intervals.
IntersectionGraph build_graph(const DominationInstance& instance);

struct SolutionMeta {
    std::string solver;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::size_t swap_count = 0;
    // Populated only when timing output is requested; canonical outputs stay
    // byte-deterministic without it.
    std::optional<double> wall_time_ms;
};

struct Solution {
    std::vector<std::size_t> indices;  // sorted, no duplicates
    SolutionMeta meta;
};

// Sorted + deduplicated + range-checked; throws InvariantViolation.
std::vector<std::size_t> normalize_indices(std::vector<std::size_t> indices, std::size_t n);

bool is_dominating(const IntersectionGraph& graph, const Solution& s);
bool is_dominating(const IntersectionGraph& graph, const std::vector<std::size_t>& selected);

bool covers(const CoverInstance& instance, const Solution& s);
bool covers(const CoverInstance& instance, const std::vector<std::size_t>& selected);
std::vector<std::size_t> uncovered_points(const CoverInstance& instance,
                                          const std::vector<std::size_t>& selected);

// P_i minus the open interiors of every other selected object: the part of
// object i that only it covers within the selection. Requires i in selected.
Region cover_free_region(std::size_t i, const std::vector<std::size_t>& selected,
                         const std::vector<ConvexPolygon>& polys);

// ---------------------------------------------------------------------------
// Shared combinatorial view consumed by the solver and the exact oracles:
// domination and cover become one "choose objects to cover elements" system.
// ---------------------------------------------------------------------------

struct SetSystem {
    std::size_t num_objects = 0;
    std::size_t num_elements = 0;
    std::vector<Bitset> object_covers;       // per object: element bits
    std::vector<Bitset> element_covered_by;  // per element: object bits

    bool full_set_feasible() const;
    bool feasible(const std::vector<std::size_t>& selected) const;
    Bitset covered_elements(const std::vector<std::size_t>& selected) const;
};

// Elements are graph vertices; object i covers its closed neighborhood.
SetSystem domination_system(const IntersectionGraph& graph);
// Elements are the instance points; object i covers the points inside it.
SetSystem cover_system(const CoverInstance& instance);

}  // namespace geoset
