#pragma once

#include <vector>
#include <vector>

#include "geoset/polygon.hpp"

namespace geoset {

/// Flat union of pairwise interior-disjoint convex cells. Cells are closed,
/// so adjacent cells may share boundary segments; the represented set is the
/// union of the cells and its area is the exact sum of cell areas.
struct Region {
    std::vector<ConvexPolygon> cells;

    bool empty() const { return cells.empty(); }
    Rational area() const;

    static Region from(ConvexPolygon poly);
};

// The part of `region` outside the open interior of `poly`, as a region with
// the same disjointness guarantee. Exact: area(result) + area(region & poly)
// equals area(region).
Region region_subtract(const Region& region, const ConvexPolygon& poly);

// Closed containment of every cell in `poly`. An empty region is contained
// in everything.
bool region_contained_in(const Region& region, const ConvexPolygon& poly);

// Splits the cells into connected components, where two cells are adjacent
// exactly when their boundaries share a positive-length segment (point
// contact does not connect).
std::vector<Region> connected_components(const Region& region);

// Exact area of the union of arbitrary (possibly overlapping) convex
// polygons, via an incremental disjoint cell decomposition.
Rational union_area(const std::vector<ConvexPolygon>& polys);

}  // namespace geoset
