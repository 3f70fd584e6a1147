#include "geoset/geometry.hpp"

#include <algorithm>

namespace geoset {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

bool lex_less(const Point& a, const Point& b) {
    const int cx = cmp(a.x, b.x);
    if (cx != 0) return cx < 0;
    return cmp(a.y, b.y) < 0;
}

Rational cross(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

Orientation orientation(const Point& a, const Point& b, const Point& c) {
    const int s = sign(cross(a, b, c));
    if (s > 0) return Orientation::Left;
    if (s < 0) return Orientation::Right;
    return Orientation::Collinear;
}

HalfPlane halfplane_left_of(const Point& p, const Point& q) {
    // left of p->q: (q-p) x (x-p) >= 0, rearranged to a*x + b*y <= c.
    Rational a = q.y - p.y;
    Rational b = p.x - q.x;
    Rational c = a * p.x + b * p.y;
    return HalfPlane{std::move(a), std::move(b), std::move(c)};
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != Orientation::Collinear) return false;
    const Point d = b - a;
    const Rational t = dot(p - a, d);
    return sign(t) >= 0 && cmp(t, dot(d, d)) <= 0;
}

namespace {

// Overlap handling for four collinear points.
SegmentIntersection collinear_case(const Point& a, const Point& b,
                                   const Point& c, const Point& d) {
    const Point dir = b - a;
    const Rational len2 = dot(dir, dir);
    if (sign(len2) == 0) {
        if (on_segment(a, c, d)) return {SegmentIntersection::Kind::Point, a};
        return {};
    }
    Rational s1 = dot(c - a, dir);
    Rational s2 = dot(d - a, dir);
    if (cmp(s1, s2) > 0) std::swap(s1, s2);
    const Rational lo = sign(s1) < 0 ? Rational(0) : s1;
    const Rational hi = cmp(s2, len2) > 0 ? len2 : s2;
    const int c_lo_hi = cmp(lo, hi);
    if (c_lo_hi > 0) return {};
    if (c_lo_hi < 0) return {SegmentIntersection::Kind::Overlap, {}};
    const Rational t = lo / len2;
    return {SegmentIntersection::Kind::Point, a + t * dir};
}

}  // namespace

SegmentIntersection segment_intersection(const Point& a, const Point& b,
                                         const Point& c, const Point& d) {
    const Orientation o1 = orientation(a, b, c);
    const Orientation o2 = orientation(a, b, d);
    const Orientation o3 = orientation(c, d, a);
    const Orientation o4 = orientation(c, d, b);

    if (o1 == Orientation::Collinear && o2 == Orientation::Collinear) {
        return collinear_case(a, b, c, d);
    }
    if (o1 != o2 && o3 != o4) {
        // proper or endpoint-touching transversal intersection
        if (o1 == Orientation::Collinear) return {SegmentIntersection::Kind::Point, c};
        if (o2 == Orientation::Collinear) return {SegmentIntersection::Kind::Point, d};
        if (o3 == Orientation::Collinear) return {SegmentIntersection::Kind::Point, a};
        if (o4 == Orientation::Collinear) return {SegmentIntersection::Kind::Point, b};
        auto p = line_intersection(a, b, c, d);
        return {SegmentIntersection::Kind::Point, *p};
    }
    if (o1 == Orientation::Collinear && on_segment(c, a, b)) return {SegmentIntersection::Kind::Point, c};
    if (o2 == Orientation::Collinear && on_segment(d, a, b)) return {SegmentIntersection::Kind::Point, d};
    if (o3 == Orientation::Collinear && on_segment(a, c, d)) return {SegmentIntersection::Kind::Point, a};
    if (o4 == Orientation::Collinear && on_segment(b, c, d)) return {SegmentIntersection::Kind::Point, b};
    return {};
}

bool segments_overlap_positively(const Point& a, const Point& b,
                                 const Point& c, const Point& d) {
    if (orientation(a, b, c) != Orientation::Collinear) return false;
    if (orientation(a, b, d) != Orientation::Collinear) return false;
    return collinear_case(a, b, c, d).kind == SegmentIntersection::Kind::Overlap;
}

std::optional<Point> line_intersection(const Point& a, const Point& b,
                                       const Point& c, const Point& d) {
    const Point r = b - a;
    const Point s = d - c;
    const Rational denom = r.x * s.y - r.y * s.x;
    if (sign(denom) == 0) return std::nullopt;
    const Point ca = c - a;
    const Rational t = (ca.x * s.y - ca.y * s.x) / denom;
    return a + t * r;
}

}  // namespace geoset
