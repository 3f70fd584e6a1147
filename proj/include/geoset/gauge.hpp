#pragma once

#include <vector>

#include "geoset/polygon.hpp"

namespace geoset {

// A convex distance function ("gauge"): distances are measured by how far
// the shape, anchored at its center, must be scaled to reach the target.
// The shape need not be symmetric, so the distance need not be either.
struct Gauge {
    ConvexPolygon shape;
    Point center;
    // Per edge of `shape`: the edge half-plane and the center's positive
    // clearance from its line. Filled by make_gauge.
    std::vector<std::pair<HalfPlane, Rational>> edges;
};

// Validates that `center` is strictly interior to `shape` (InvalidParams
// otherwise) and precomputes the edge clearances.
Gauge make_gauge(const ConvexPolygon& shape, const Point& center);

// Scale at which the gauge shape, translated so its center sits at p1,
// first reaches p2 along the ray p1 -> p2. Exactly 0 when p1 == p2.
// Translation-invariant and positively homogeneous in p2 - p1.
Rational delta(const Gauge& g, const Point& p1, const Point& p2);

// min over q in P of delta(g, p, q); exactly 0 iff p lies in the closed
// polygon. The minimum of this piecewise-linear convex function is attained
// at a vertex of P or where a ray from p through a gauge vertex meets an
// edge of P, so finitely many candidates suffice.
Rational dist_to_convex(const Gauge& g, const Point& p, const ConvexPolygon& target);

// Exact check of delta(p1,p3) == delta(p1,p2) + delta(p2,p3). Guaranteed to
// hold whenever p2 lies on the segment [p1, p3]; the caller maintains that
// precondition.
bool check_segment_additivity(const Gauge& g, const Point& p1, const Point& p2,
                              const Point& p3);

// Exact check of delta(p1,p3) <= delta(p1,p2) + delta(p2,p3); holds for
// every convex gauge.
bool check_triangle_inequality(const Gauge& g, const Point& p1, const Point& p2,
                               const Point& p3);

}  // namespace geoset
