#pragma once

#include <optional>

#include "geoset/rational.hpp"

namespace geoset {

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);

// Lexicographic by x, then y. Used for canonical vertex rotation.
bool lex_less(const Point& a, const Point& b);

enum class Orientation { Left, Right, Collinear };

// Signed cross product (b - a) x (c - a).
Rational cross(const Point& a, const Point& b, const Point& c);
Rational dot(const Point& a, const Point& b);

// Turn of c relative to the directed line a -> b.
Orientation orientation(const Point& a, const Point& b, const Point& c);

// Closed half-plane a*x + b*y <= c with (a, b) != (0, 0).
struct HalfPlane {
    Rational a;
    Rational b;
    Rational c;

    // < 0 strictly inside, 0 on the line, > 0 strictly outside.
    Rational eval(const Point& p) const { return a * p.x + b * p.y - c; }
    bool contains(const Point& p) const { return sign(eval(p)) <= 0; }
    bool strictly_contains(const Point& p) const { return sign(eval(p)) < 0; }
    // The closed complement; the two half-planes overlap exactly on the line.
    HalfPlane complement() const { return HalfPlane{-a, -b, -c}; }
};

// Half-plane whose interior is strictly left of the directed line p -> q.
HalfPlane halfplane_left_of(const Point& p, const Point& q);

// True when p lies on the closed segment [a, b]; a may equal b.
bool on_segment(const Point& p, const Point& a, const Point& b);

struct SegmentIntersection {
    enum class Kind { None, Point, Overlap } kind = Kind::None;
    geoset::Point point;  // set when kind == Point
};

// Exact intersection of the closed segments [a,b] and [c,d]. Overlap means a
// shared subsegment of positive length.
SegmentIntersection segment_intersection(const Point& a, const Point& b,
                                         const Point& c, const Point& d);

// True when [a,b] and [c,d] are collinear and share a positive-length piece.
bool segments_overlap_positively(const Point& a, const Point& b,
                                 const Point& c, const Point& d);

// Intersection point of lines (a,b) and (c,d); nullopt when parallel.
std::optional<Point> line_intersection(const Point& a, const Point& b,
                                       const Point& c, const Point& d);

}  // namespace geoset
