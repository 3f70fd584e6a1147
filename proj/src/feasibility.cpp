#include "geoset/feasibility.hpp"

#include <algorithm>

#include "geoset/errors.hpp"

namespace geoset {

IntersectionGraph build_graph(const std::vector<ConvexPolygon>& polys) {
    IntersectionGraph g;
    g.n = polys.size();
    g.closed_neighborhood.assign(g.n, Bitset(g.n));
    for (std::size_t i = 0; i < g.n; ++i) g.closed_neighborhood[i].set(i);
    for (std::size_t i = 0; i < g.n; ++i) {
        for (std::size_t j = i + 1; j < g.n; ++j) {
            if (touches(polys[i], polys[j])) {
                g.closed_neighborhood[i].set(j);
                g.closed_neighborhood[j].set(i);
            }
        }
    }
    return g;
}

IntersectionGraph build_graph(const DominationInstance& instance) {
    const std::size_t n = instance.objects.size();
    const ConvexPolygon& base = instance.base.polygon;
    const Point& bc = instance.base.center;
    const std::size_t k = base.size();

    // Shared separating-axis directions: the base's edge normals. Every
    // homothet projects onto each axis as an interval, and two closed
    // homothets are disjoint iff some axis strictly separates their
    // intervals. Projections scale affinely, so the base's per-axis extremes
    // (relative to its center) are computed once.
    struct Interval {
        Rational lo, hi;
    };
    std::vector<std::pair<Rational, Rational>> axes(k);
    std::vector<Interval> base_range(k);
    for (std::size_t e = 0; e < k; ++e) {
        const HalfPlane h = base.edge_halfplane(e);
        axes[e] = {h.a, h.b};
        for (std::size_t vi = 0; vi < base.size(); ++vi) {
            const Point& v = base.vertices()[vi];
            Rational proj = h.a * (v.x - bc.x) + h.b * (v.y - bc.y);
            if (vi == 0) {
                base_range[e] = {proj, proj};
            } else if (proj < base_range[e].lo) {
                base_range[e].lo = std::move(proj);
            } else if (proj > base_range[e].hi) {
                base_range[e].hi = std::move(proj);
            }
        }
    }

    std::vector<std::vector<Interval>> ranges(n, std::vector<Interval>(k));
    for (std::size_t i = 0; i < n; ++i) {
        const Homothet& h = instance.objects[i];
        for (std::size_t e = 0; e < k; ++e) {
            const Rational at_center = axes[e].first * h.center.x + axes[e].second * h.center.y;
            ranges[i][e] = {at_center + h.scale * base_range[e].lo,
                            at_center + h.scale * base_range[e].hi};
        }
    }

    IntersectionGraph g;
    g.n = n;
    g.closed_neighborhood.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) g.closed_neighborhood[i].set(i);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool separated = false;
            for (std::size_t e = 0; e < k && !separated; ++e)
                separated = ranges[i][e].lo > ranges[j][e].hi || ranges[j][e].lo > ranges[i][e].hi;
            if (!separated) {
                g.closed_neighborhood[i].set(j);
                g.closed_neighborhood[j].set(i);
            }
        }
    }
    return g;
}

std::vector<std::size_t> normalize_indices(std::vector<std::size_t> indices, std::size_t n) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (!indices.empty() && indices.back() >= n)
        throw InvariantViolation("solution index out of range");
    return indices;
}

bool is_dominating(const IntersectionGraph& graph, const std::vector<std::size_t>& selected) {
    Bitset dominated(graph.n);
    for (const std::size_t i : selected) dominated |= graph.closed_neighborhood[i];
    return dominated.count() == graph.n;
}

bool is_dominating(const IntersectionGraph& graph, const Solution& s) {
    return is_dominating(graph, s.indices);
}

std::vector<std::size_t> uncovered_points(const CoverInstance& instance,
                                          const std::vector<std::size_t>& selected) {
    std::vector<std::size_t> missing;
    for (std::size_t p = 0; p < instance.points.size(); ++p) {
        bool hit = false;
        for (const std::size_t i : selected) {
            if (contains_point(instance.objects[i], instance.points[p])) {
                hit = true;
                break;
            }
        }
        if (!hit) missing.push_back(p);
    }
    return missing;
}

bool covers(const CoverInstance& instance, const std::vector<std::size_t>& selected) {
    return uncovered_points(instance, selected).empty();
}

bool covers(const CoverInstance& instance, const Solution& s) {
    return covers(instance, s.indices);
}

Region cover_free_region(std::size_t i, const std::vector<std::size_t>& selected,
                         const std::vector<ConvexPolygon>& polys) {
    if (std::find(selected.begin(), selected.end(), i) == selected.end())
        throw InvariantViolation("cover_free_region requires i to be selected");
    Region region = Region::from(polys[i]);
    for (const std::size_t j : selected) {
        if (j == i) continue;
        region = region_subtract(region, polys[j]);
        if (region.empty()) break;
    }
    return region;
}

bool SetSystem::full_set_feasible() const {
    for (const Bitset& owners : element_covered_by)
        if (owners.none()) return false;
    return true;
}

Bitset SetSystem::covered_elements(const std::vector<std::size_t>& selected) const {
    Bitset covered(num_elements);
    for (const std::size_t i : selected) covered |= object_covers[i];
    return covered;
}

bool SetSystem::feasible(const std::vector<std::size_t>& selected) const {
    return covered_elements(selected).count() == num_elements;
}

SetSystem domination_system(const IntersectionGraph& graph) {
    SetSystem sys;
    sys.num_objects = graph.n;
    sys.num_elements = graph.n;
    sys.object_covers = graph.closed_neighborhood;
    sys.element_covered_by.assign(graph.n, Bitset(graph.n));
    for (std::size_t i = 0; i < graph.n; ++i)
        for (std::size_t e = graph.closed_neighborhood[i].find_first(); e != Bitset::npos;
             e = graph.closed_neighborhood[i].find_next(e))
            sys.element_covered_by[e].set(i);
    return sys;
}

SetSystem cover_system(const CoverInstance& instance) {
    SetSystem sys;
    sys.num_objects = instance.objects.size();
    sys.num_elements = instance.points.size();
    sys.object_covers.assign(sys.num_objects, Bitset(sys.num_elements));
    sys.element_covered_by.assign(sys.num_elements, Bitset(sys.num_objects));
    for (std::size_t i = 0; i < sys.num_objects; ++i) {
        for (std::size_t p = 0; p < sys.num_elements; ++p) {
            if (contains_point(instance.objects[i], instance.points[p])) {
                sys.object_covers[i].set(p);
                sys.element_covered_by[p].set(i);
            }
        }
    }
    return sys;
}

}  // namespace geoset
