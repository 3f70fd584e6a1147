#include "geoset/gauge.hpp"

#include <algorithm>

#include "geoset/errors.hpp"

namespace geoset {

Gauge make_gauge(const ConvexPolygon& shape, const Point& center) {
    if (locate_point(shape, center) != PointLocation::Interior) {
        throw InvalidParams("gauge center must be strictly interior to the shape");
    }
    Gauge g{shape, center, {}};
    g.edges.reserve(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) {
        const HalfPlane h = shape.edge_halfplane(i);
        g.edges.emplace_back(h, -h.eval(center));  // strictly positive clearance
    }
    return g;
}

Rational delta(const Gauge& g, const Point& p1, const Point& p2) {
    // Scaling the shape about its (translated) center by t moves the edge
    // line a*x + b*y = c out to clearance t * clearance, so p2 is reached at
    // t = (h . d) / clearance for the edge the ray exits through — the
    // largest such ratio. Only the displacement d matters.
    const Point d = p2 - p1;
    Rational best(0);
    for (const auto& [h, clearance] : g.edges) {
        const Rational reach = (h.a * d.x + h.b * d.y) / clearance;
        if (reach > best) best = reach;
    }
    return best;
}

Rational dist_to_convex(const Gauge& g, const Point& p, const ConvexPolygon& target) {
    if (locate_point(target, p) != PointLocation::Outside) return Rational(0);

    Rational best = delta(g, p, target.vertex(0));
    for (std::size_t i = 1; i < target.size(); ++i) {
        best = std::min(best, delta(g, p, target.vertex(i)));
    }

    // A minimal touching translate can also meet an edge of the target at
    // one of the gauge's own vertices: shoot the ray from p through each
    // gauge-vertex direction and keep hits that land on an edge.
    for (std::size_t vi = 0; vi < g.shape.size(); ++vi) {
        const Point dir = g.shape.vertex(vi) - g.center;
        for (std::size_t ei = 0; ei < target.size(); ++ei) {
            const Point a = target.vertex(ei);
            const Point b = target.vertex(ei + 1);
            const auto hit = line_intersection(p, p + dir, a, b);
            if (!hit) continue;  // parallel: any contact is covered by vertices
            if (dot(*hit - p, dir) <= 0) continue;  // behind the ray origin
            if (!on_segment(*hit, a, b)) continue;
            best = std::min(best, delta(g, p, *hit));
        }
    }
    return best;
}

bool check_segment_additivity(const Gauge& g, const Point& p1, const Point& p2,
                              const Point& p3) {
    return delta(g, p1, p3) == delta(g, p1, p2) + delta(g, p2, p3);
}

bool check_triangle_inequality(const Gauge& g, const Point& p1, const Point& p2,
                               const Point& p3) {
    return delta(g, p1, p3) <= delta(g, p1, p2) + delta(g, p2, p3);
}

}  // namespace geoset
