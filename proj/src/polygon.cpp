#include "geoset/polygon.hpp"

#include <algorithm>
#include <utility>

#include "geoset/errors.hpp"

namespace geoset {

namespace {

void remove_consecutive_duplicates(std::vector<Point>& vs) {
    std::vector<Point> out;
    out.reserve(vs.size());
    for (const Point& p : vs) {
        if (out.empty() || out.back() != p) out.push_back(p);
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    vs = std::move(out);
}

// Removes vertices collinear with their cyclic neighbors until stable.
void remove_collinear(std::vector<Point>& vs) {
    bool changed = true;
    while (changed && vs.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < vs.size() && vs.size() >= 3; ++i) {
            const Point& prev = vs[(i + vs.size() - 1) % vs.size()];
            const Point& next = vs[(i + 1) % vs.size()];
            if (orientation(prev, vs[i], next) == Orientation::Collinear) {
                vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
}

// Sign-change count of a cyclic sequence, zeros skipped. A convex boundary
// traversed exactly once changes direction sign exactly twice per axis.
int cyclic_sign_changes(const std::vector<int>& signs) {
    int last = 0, changes = 0, first = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (first == 0) first = s;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    if (last != 0 && first != 0 && last != first) ++changes;
    return changes;
}

Rational shoelace_twice(const std::vector<Point>& vs) {
    Rational sum = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % vs.size()];
        sum += a.x * b.y - b.x * a.y;
    }
    return sum;
}

enum class NormalizeStatus { Ok, Degenerate, NotConvex };

NormalizeStatus normalize_vertices(std::vector<Point>& vs) {
    remove_consecutive_duplicates(vs);
    remove_collinear(vs);
    if (vs.size() < 3) return NormalizeStatus::Degenerate;

    bool any_left = false, any_right = false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Orientation o = orientation(vs[i], vs[(i + 1) % vs.size()], vs[(i + 2) % vs.size()]);
        if (o == Orientation::Left) any_left = true;
        if (o == Orientation::Right) any_right = true;
    }
    if (any_left && any_right) return NormalizeStatus::NotConvex;
    if (any_right) std::reverse(vs.begin(), vs.end());

    // Reject vertex orders that turn left everywhere but wind more than once.
    std::vector<int> sx, sy;
    sx.reserve(vs.size());
    sy.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point d = vs[(i + 1) % vs.size()] - vs[i];
        sx.push_back(sign(d.x));
        sy.push_back(sign(d.y));
    }
    if (cyclic_sign_changes(sx) != 2 || cyclic_sign_changes(sy) != 2) {
        return NormalizeStatus::NotConvex;
    }

    const auto lowest = std::min_element(vs.begin(), vs.end(), lex_less);
    std::rotate(vs.begin(), lowest, vs.end());
    return NormalizeStatus::Ok;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point> normalized) : verts_(std::move(normalized)) {
    area_ = shoelace_twice(verts_) / 2;
    box_ = Box{verts_[0].x, verts_[0].x, verts_[0].y, verts_[0].y};
    for (const Point& v : verts_) {
        if (cmp(v.x, box_.xmin) < 0) box_.xmin = v.x;
        if (cmp(v.x, box_.xmax) > 0) box_.xmax = v.x;
        if (cmp(v.y, box_.ymin) < 0) box_.ymin = v.y;
        if (cmp(v.y, box_.ymax) > 0) box_.ymax = v.y;
    }
}

std::optional<ConvexPolygon> ConvexPolygon::try_from_vertices(std::vector<Point> vertices) {
    switch (normalize_vertices(vertices)) {
        case NormalizeStatus::Degenerate:
            return std::nullopt;
        case NormalizeStatus::NotConvex:
            throw InvariantViolation("vertex list is not strictly convex");
        case NormalizeStatus::Ok:
            break;
    }
    return ConvexPolygon(std::move(vertices));
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point> vertices) {
    auto poly = try_from_vertices(std::move(vertices));
    if (!poly) throw InvariantViolation("polygon is empty or degenerate");
    return *poly;
}

HalfPlane ConvexPolygon::edge_halfplane(std::size_t i) const {
    return halfplane_left_of(verts_[i % verts_.size()], verts_[(i + 1) % verts_.size()]);
}

PointLocation locate_point(const ConvexPolygon& poly, const Point& p) {
    bool on_boundary = false;
    const auto& vs = poly.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        switch (orientation(vs[i], vs[(i + 1) % vs.size()], p)) {
            case Orientation::Right:
                return PointLocation::Outside;
            case Orientation::Collinear:
                on_boundary = true;
                break;
            case Orientation::Left:
                break;
        }
    }
    return on_boundary ? PointLocation::Boundary : PointLocation::Interior;
}

bool contains_point(const ConvexPolygon& poly, const Point& p) {
    return locate_point(poly, p) != PointLocation::Outside;
}

bool contains_polygon(const ConvexPolygon& outer, const ConvexPolygon& inner) {
    for (const Point& v : inner.vertices()) {
        if (!contains_point(outer, v)) return false;
    }
    return true;
}

std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly, const HalfPlane& h) {
    const auto& vs = poly.vertices();
    std::vector<Point> out;
    out.reserve(vs.size() + 2);
    std::vector<int> side(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) side[i] = sign(h.eval(vs[i]));

    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::size_t j = (i + 1) % vs.size();
        if (side[i] <= 0) out.push_back(vs[i]);
        if (side[i] * side[j] < 0) {
            // crossing point: cur + t * (nxt - cur) with t = f(cur)/(f(cur)-f(nxt))
            const Rational fc = h.eval(vs[i]);
            const Rational fn = h.eval(vs[j]);
            const Rational t = fc / (fc - fn);
            out.push_back(vs[i] + t * (vs[j] - vs[i]));
        }
    }
    return ConvexPolygon::try_from_vertices(std::move(out));
}

std::optional<ConvexPolygon> convex_intersect(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::optional<ConvexPolygon> cur = p;
    for (std::size_t i = 0; i < q.size() && cur; ++i) {
        cur = clip_halfplane(*cur, q.edge_halfplane(i));
    }
    return cur;
}

namespace {

// True when some supporting edge line of `p` has all of `q` beyond it.
// strict=false counts touching the line as beyond (weak separation).
bool separated_by_edge_of(const ConvexPolygon& p, const ConvexPolygon& q, bool strict) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        const HalfPlane h = p.edge_halfplane(i);
        bool all_out = true;
        for (const Point& v : q.vertices()) {
            const int s = sign(h.eval(v));
            if (strict ? s <= 0 : s < 0) {
                all_out = false;
                break;
            }
        }
        if (all_out) return true;
    }
    return false;
}

bool bbox_closed_disjoint(const ConvexPolygon& p, const ConvexPolygon& q) {
    const auto& a = p.bbox();
    const auto& b = q.bbox();
    return cmp(a.xmax, b.xmin) < 0 || cmp(b.xmax, a.xmin) < 0 ||
           cmp(a.ymax, b.ymin) < 0 || cmp(b.ymax, a.ymin) < 0;
}

}  // namespace

bool interiors_intersect(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (bbox_closed_disjoint(p, q)) return false;
    return !separated_by_edge_of(p, q, false) && !separated_by_edge_of(q, p, false);
}

bool touches(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (bbox_closed_disjoint(p, q)) return false;
    return !separated_by_edge_of(p, q, true) && !separated_by_edge_of(q, p, true);
}

namespace {

// Dedicated comparison for sorting boundary parameters.
bool rational_less(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }

}  // namespace

std::optional<Rational> boundary_parameter(const ConvexPolygon& poly, const Point& p) {
    const auto& vs = poly.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % vs.size()];
        if (p == b) continue;  // counted as t = 0 of the next edge
        if (!on_segment(p, a, b)) continue;
        const Point d = b - a;
        const Rational t = dot(p - a, d) / dot(d, d);
        return Rational(static_cast<long>(i)) + t;
    }
    return std::nullopt;
}

Point boundary_point_at(const ConvexPolygon& poly, const Rational& param) {
    const long n = static_cast<long>(poly.size());
    Rational p = param;
    // reduce into [0, n)
    mpz_class edge_idx;
    mpz_fdiv_q(edge_idx.get_mpz_t(), p.get_num_mpz_t(), p.get_den_mpz_t());
    long idx = edge_idx.get_si();
    Rational t = p - Rational(idx);
    idx = ((idx % n) + n) % n;
    const Point& a = poly.vertex(static_cast<std::size_t>(idx));
    const Point& b = poly.vertex(static_cast<std::size_t>(idx) + 1);
    return a + t * (b - a);
}

std::vector<Point> boundary_crossing_points(const ConvexPolygon& p, const ConvexPolygon& q) {
    const auto& pv = p.vertices();
    const auto& qv = q.vertices();

    std::vector<Point> meets;
    for (std::size_t i = 0; i < qv.size(); ++i) {
        const Point& a = qv[i];
        const Point& b = qv[(i + 1) % qv.size()];
        for (std::size_t j = 0; j < pv.size(); ++j) {
            const Point& c = pv[j];
            const Point& d = pv[(j + 1) % pv.size()];
            const auto hit = segment_intersection(a, b, c, d);
            if (hit.kind == SegmentIntersection::Kind::Overlap) {
                throw DegenerateOverlap("boundaries share a positive-length segment");
            }
            if (hit.kind == SegmentIntersection::Kind::Point) meets.push_back(hit.point);
        }
    }
    if (meets.empty()) return {};

    // Order the distinct meeting points along q's boundary.
    std::vector<std::pair<Rational, Point>> ordered;
    for (const Point& m : meets) {
        if (std::any_of(ordered.begin(), ordered.end(),
                        [&](const auto& e) { return e.second == m; })) {
            continue;
        }
        auto param = boundary_parameter(q, m);
        ordered.emplace_back(*param, m);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& l, const auto& r) { return rational_less(l.first, r.first); });

    if (ordered.size() == 1) return {};  // single tangential touch

    // Classify the open arcs between consecutive meeting points: each arc is
    // entirely inside or entirely outside p. A meeting point is a transversal
    // crossing exactly when its two adjacent arcs lie on opposite sides.
    const std::size_t k = ordered.size();
    const Rational n_q(static_cast<long>(q.size()));
    std::vector<bool> arc_inside(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Rational& s = ordered[i].first;
        Rational e = ordered[(i + 1) % k].first;
        if (i + 1 == k) e += n_q;
        // representative strictly inside the arc: first vertex of q in the
        // open parameter range, else the parameter midpoint
        Point rep;
        bool found = false;
        mpz_class fl;
        mpz_cdiv_q(fl.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
        for (Rational v(fl.get_si()); cmp(v, e) < 0; v += 1) {
            if (cmp(v, s) > 0) {
                rep = boundary_point_at(q, v);
                found = true;
                break;
            }
        }
        if (!found) rep = boundary_point_at(q, (s + e) / 2);
        const PointLocation loc = locate_point(p, rep);
        arc_inside[i] = (loc == PointLocation::Interior);
    }

    std::vector<Point> crossings;
    for (std::size_t i = 0; i < k; ++i) {
        const bool before = arc_inside[(i + k - 1) % k];
        const bool after = arc_inside[i];
        if (before != after) crossings.push_back(ordered[i].second);
    }
    return crossings;
}

std::size_t boundary_crossings(const ConvexPolygon& p, const ConvexPolygon& q) {
    return boundary_crossing_points(p, q).size();
}

ConvexPolygon convex_hull(std::span<const Point> points) {
    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw InvariantViolation("hull needs 3 distinct points");

    auto build_chain = [&](auto begin, auto end) {
        std::vector<Point> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   orientation(chain[chain.size() - 2], chain.back(), *it) != Orientation::Left) {
                chain.pop_back();
            }
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Point> lower = build_chain(pts.begin(), pts.end());
    std::vector<Point> upper = build_chain(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return ConvexPolygon::from_vertices(std::move(lower));
}

ConvexPolygon translate(const ConvexPolygon& poly, const Point& offset) {
    std::vector<Point> vs;
    vs.reserve(poly.size());
    for (const Point& v : poly.vertices()) vs.push_back(v + offset);
    return ConvexPolygon::from_vertices(std::move(vs));
}

ConvexPolygon scale_about(const ConvexPolygon& poly, const Point& center, const Rational& factor) {
    if (sign(factor) <= 0) throw InvariantViolation("scale factor must be positive");
    std::vector<Point> vs;
    vs.reserve(poly.size());
    for (const Point& v : poly.vertices()) vs.push_back(center + factor * (v - center));
    return ConvexPolygon::from_vertices(std::move(vs));
}

}  // namespace geoset
