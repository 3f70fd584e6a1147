#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "geoset/geometry.hpp"

namespace geoset {

/// Strictly convex polygon with counterclockwise vertices.
///
/// Construction normalizes the vertex list: consecutive duplicates and
/// collinear middle vertices are removed, clockwise input is reversed, and
/// the list is rotated so the lexicographically smallest vertex comes first.
/// Equality is therefore plain vertex-list equality. Construction throws
/// InvariantViolation when the input does not describe a strictly convex
/// polygon of positive area.
class ConvexPolygon {
  public:
    struct Box {
        Rational xmin, xmax, ymin, ymax;
    };

    static ConvexPolygon from_vertices(std::vector<Point> vertices);

    // Like from_vertices but yields nullopt for empty or degenerate input
    // (fewer than 3 distinct vertices after normalization, zero area).
    // Still throws InvariantViolation for genuinely non-convex input.
    static std::optional<ConvexPolygon> try_from_vertices(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Point& vertex(std::size_t i) const { return verts_[i % verts_.size()]; }
    const Rational& area() const { return area_; }
    const Box& bbox() const { return box_; }

    // Closed half-plane supported by edge i (vertex i -> vertex i+1).
    HalfPlane edge_halfplane(std::size_t i) const;

    bool operator==(const ConvexPolygon& o) const { return verts_ == o.verts_; }
    bool operator!=(const ConvexPolygon& o) const { return !(*this == o); }

  private:
    explicit ConvexPolygon(std::vector<Point> normalized);
    std::vector<Point> verts_;
    Rational area_;
    Box box_;
};

enum class PointLocation { Interior, Boundary, Outside };

PointLocation locate_point(const ConvexPolygon& poly, const Point& p);

// Closed containment: Interior or Boundary.
bool contains_point(const ConvexPolygon& poly, const Point& p);

// Closed containment of a convex polygon; the vertex test suffices.
bool contains_polygon(const ConvexPolygon& outer, const ConvexPolygon& inner);

// P intersected with a closed half-plane. Absent when the result is empty or
// degenerate (a point or segment); otherwise area(P & H) + area(P & ~H)
// equals area(P) exactly.
std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly, const HalfPlane& h);

// Positive-area intersection, computed by clipping p against q's edges.
std::optional<ConvexPolygon> convex_intersect(const ConvexPolygon& p, const ConvexPolygon& q);

// Open-interior overlap test (separating-axis, exact).
bool interiors_intersect(const ConvexPolygon& p, const ConvexPolygon& q);

// Closed-set contact test: true whenever the polygons share any point.
bool touches(const ConvexPolygon& p, const ConvexPolygon& q);

// Transversal crossing points of the two boundaries, ordered along q's
// boundary. Tangential contacts are excluded. Throws DegenerateOverlap when
// the boundaries share a positive-length segment.
std::vector<Point> boundary_crossing_points(const ConvexPolygon& p, const ConvexPolygon& q);

// Number of transversal crossings; always even.
std::size_t boundary_crossings(const ConvexPolygon& p, const ConvexPolygon& q);

// Convex hull of a point set (strictly convex result). Throws
// InvariantViolation when all points are collinear or fewer than 3 distinct.
ConvexPolygon convex_hull(std::span<const Point> points);

ConvexPolygon translate(const ConvexPolygon& poly, const Point& offset);

// Homothety x -> center + factor * (x - center), factor > 0.
ConvexPolygon scale_about(const ConvexPolygon& poly, const Point& center, const Rational& factor);

// Cyclic position of a boundary point as edge_index + t, t in [0, 1);
// nullopt when p is not on the boundary.
std::optional<Rational> boundary_parameter(const ConvexPolygon& poly, const Point& p);

// Point at cyclic boundary parameter (taken modulo the vertex count).
Point boundary_point_at(const ConvexPolygon& poly, const Rational& param);

}  // namespace geoset
