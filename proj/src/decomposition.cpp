#include "geoset/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "geoset/errors.hpp"
#include "geoset/feasibility.hpp"
#include "geoset/instances.hpp"

namespace geoset {

namespace {

std::string pair_label(std::size_t i, std::size_t j) {
    return "objects " + std::to_string(i) + " and " + std::to_string(j);
}

Point midpoint(const Point& a, const Point& b) { return make_rational(1, 2) * (a + b); }

Rational rational_mod(const Rational& x, const Rational& period) {
    const Rational q = x / period;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return x - Rational(fl) * period;
}

// ----- chord cuts -------------------------------------------------------

// Vertices of `poly` whose boundary parameters lie strictly between t_from
// and t_to going forward (cyclically), in walk order.
std::vector<Point> arc_vertices(const ConvexPolygon& poly, const Rational& t_from,
                                const Rational& t_to) {
    const Rational period = make_rational(static_cast<long>(poly.size()), 1);
    Rational span = t_to - t_from;
    if (span <= 0) span += period;
    std::vector<std::pair<Rational, Point>> keyed;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const Rational rel = rational_mod(make_rational(static_cast<long>(k), 1) - t_from, period);
        if (rel > 0 && rel < span) keyed.emplace_back(rel, poly.vertex(k));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Point> out;
    out.reserve(keyed.size());
    for (auto& [rel, pt] : keyed) out.push_back(pt);
    return out;
}

enum class ArcStatus { Inside, Outside, Undecided };

struct ArcInfo {
    ArcStatus status = ArcStatus::Undecided;
    Orientation side = Orientation::Collinear;  // Collinear = the arc IS the chord
};

// Classifies one boundary arc (from arc_a over `verts` to arc_b) against
// `other`: which side of the chord line chord_p -> chord_q it bulges to, and
// whether it runs inside or outside `other`. A convex arc is either straight
// on the chord line or entirely on one side of it, and between two
// consecutive transversal crossings it stays inside or outside except for
// isolated tangential touches, so the first decisive sample settles each
// question.
ArcInfo classify_arc(const ConvexPolygon& other, const Point& chord_p, const Point& chord_q,
                     const Point& arc_a, const Point& arc_b, const std::vector<Point>& verts) {
    std::vector<Point> polyline;
    polyline.reserve(verts.size() + 2);
    polyline.push_back(arc_a);
    polyline.insert(polyline.end(), verts.begin(), verts.end());
    polyline.push_back(arc_b);

    std::vector<Point> samples = verts;
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
        samples.push_back(midpoint(polyline[i], polyline[i + 1]));
    }

    ArcInfo info;
    for (const Point& sp : samples) {
        if (info.side == Orientation::Collinear) {
            const Orientation o = orientation(chord_p, chord_q, sp);
            if (o != Orientation::Collinear) info.side = o;
        }
        if (info.status == ArcStatus::Undecided) {
            const PointLocation loc = locate_point(other, sp);
            if (loc == PointLocation::Interior) info.status = ArcStatus::Inside;
            if (loc == PointLocation::Outside) info.status = ArcStatus::Outside;
        }
        if (info.side != Orientation::Collinear && info.status != ArcStatus::Undecided) break;
    }
    return info;
}

struct ChordCut {
    ConvexPolygon piece;
    std::optional<HalfPlane> kept;  // absent when the cut was a no-op
};

// Removes from `poly` the piece between the chord p1-p2 and poly's boundary
// arc running inside `other`. When that arc is the chord itself (the partner
// merely dips across one straight edge), nothing needs to be removed.
ChordCut cut_away_inside_arc(const ConvexPolygon& poly, const ConvexPolygon& other,
                             const Point& p1, const Point& p2) {
    const auto t1 = boundary_parameter(poly, p1);
    const auto t2 = boundary_parameter(poly, p2);
    if (!t1 || !t2) throw InvariantViolation("chord endpoint is off the boundary");

    const ArcInfo fwd =
        classify_arc(other, p1, p2, p1, p2, arc_vertices(poly, *t1, *t2));
    const ArcInfo bwd =
        classify_arc(other, p1, p2, p2, p1, arc_vertices(poly, *t2, *t1));

    if (fwd.status == ArcStatus::Inside && bwd.status == ArcStatus::Inside) {
        throw DegenerateChord("both boundary arcs lie inside the partner");
    }
    const ArcInfo* inside = nullptr;
    if (fwd.status == ArcStatus::Inside) inside = &fwd;
    if (bwd.status == ArcStatus::Inside) inside = &bwd;
    if (inside == nullptr) {
        throw DegenerateChord("no boundary arc lies inside the partner");
    }
    if (inside->side == Orientation::Collinear) return {poly, std::nullopt};

    const HalfPlane keep = inside->side == Orientation::Left ? halfplane_left_of(p2, p1)
                                                             : halfplane_left_of(p1, p2);
    auto clipped = clip_halfplane(poly, keep);
    if (!clipped) throw DegenerateChord("chord cut would erase the whole object");
    return {*clipped, keep};
}

void verify_phase_invariants(const std::vector<ConvexPolygon>& cur, std::size_t phase) {
    const std::size_t n = cur.size();
    for (std::size_t t = 0; t <= phase; ++t) {
        for (std::size_t s = 0; s < n; ++s) {
            if (s != t && interiors_intersect(cur[t], cur[s])) {
                throw InvariantViolation("phase " + std::to_string(phase) +
                                         " left an interior overlap between " +
                                         pair_label(t, s));
            }
        }
    }
    for (std::size_t a = phase + 1; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (interiors_intersect(cur[a], cur[b]) && boundary_crossings(cur[a], cur[b]) > 2) {
                throw NotPseudodisks(pair_label(a, b) + " cross more than twice after phase " +
                                     std::to_string(phase));
            }
        }
    }
}

}  // namespace

DecompositionResult disjoint_union_decomposition(const std::vector<ConvexPolygon>& family,
                                                 const DecompositionOptions& options) {
    const std::size_t n = family.size();
    if (n == 0) throw InvalidParams("decomposition needs at least one polygon");

    for (const PseudodiskOffender& off : verify_pseudodisk_family(family)) {
        if (!off.crossings.has_value()) {
            throw DegenerateOverlap(pair_label(off.i, off.j) + " share a boundary segment");
        }
        throw NotPseudodisks(pair_label(off.i, off.j) + " cross " +
                             std::to_string(*off.crossings) + " times");
    }
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i) {
        if (cover_free_region(i, all, family).empty()) {
            throw NotCoverFree("object " + std::to_string(i) +
                               " adds no exclusive area to the union");
        }
    }

    DecompositionResult result;
    std::vector<ConvexPolygon> cur = family;
    for (std::size_t i = 0; i < n; ++i) {
        const ConvexPolygon x = cur[i];  // fixed reference shape for this phase
        std::vector<HalfPlane> x_cuts;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (!interiors_intersect(cur[j], x)) {
                if (touches(cur[j], x)) ++result.tangential_skips;
                continue;
            }
            const std::vector<Point> pts = boundary_crossing_points(cur[j], x);
            if (pts.size() != 2) {
                throw DegenerateChord(pair_label(i, j) + " overlap with " +
                                      std::to_string(pts.size()) +
                                      " boundary crossings; expected exactly 2");
            }
            const Point p1 = pts[0];
            const Point p2 = pts[1];
            result.chords.push_back(ChordRecord{i, j, p1, p2});

            const ConvexPolygon partner = cur[j];
            cur[j] = cut_away_inside_arc(partner, x, p1, p2).piece;
            ChordCut xcut = cut_away_inside_arc(x, partner, p1, p2);
            if (xcut.kept.has_value()) x_cuts.push_back(*xcut.kept);
        }
        ConvexPolygon xi = x;
        for (const HalfPlane& h : x_cuts) {
            auto clipped = clip_halfplane(xi, h);
            if (!clipped) {
                throw InvariantViolation("object " + std::to_string(i) +
                                         " vanished during its phase");
            }
            xi = *clipped;
        }
        cur[i] = xi;
        if (options.verify_phases) verify_phase_invariants(cur, i);
        if (options.record_snapshots) result.snapshots.push_back(cur);
    }
    result.tilde = std::move(cur);
    return result;
}

DecompositionReport verify_decomposition(const std::vector<ConvexPolygon>& family,
                                         const std::vector<ConvexPolygon>& tilde) {
    DecompositionReport report;
    report.sizes_match = family.size() == tilde.size();
    if (!report.sizes_match) {
        report.failures.push_back("family and result sizes differ");
        return report;
    }
    const std::size_t n = family.size();

    report.subsets = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!contains_polygon(family[i], tilde[i])) {
            report.subsets = false;
            report.failures.push_back("object " + std::to_string(i) +
                                      " is not contained in its original");
        }
    }

    report.union_area_preserved = union_area(family) == union_area(tilde);
    if (!report.union_area_preserved) report.failures.push_back("union area changed");

    report.pairwise_disjoint = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (interiors_intersect(tilde[i], tilde[j])) {
                report.pairwise_disjoint = false;
                report.failures.push_back(pair_label(i, j) + " still overlap");
            }
        }
    }

    report.cover_free_contained = true;
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i) {
        const Region cf = cover_free_region(i, all, family);
        if (!region_contained_in(cf, tilde[i])) {
            report.cover_free_contained = false;
            report.failures.push_back("exclusive region of object " + std::to_string(i) +
                                      " is not inside its result");
        }
    }
    return report;
}

// ----- petals and separating edges --------------------------------------

namespace {

// Overlap of collinear closed segments [a,b] and [c,d] with positive length,
// as its two endpoints ordered along a -> b.
std::optional<std::pair<Point, Point>> collinear_overlap(const Point& a, const Point& b,
                                                         const Point& c, const Point& d) {
    if (orientation(a, b, c) != Orientation::Collinear ||
        orientation(a, b, d) != Orientation::Collinear) {
        return std::nullopt;
    }
    const Point dir = b - a;
    const Rational len2 = dot(dir, dir);
    Rational tc = dot(c - a, dir);
    Rational td = dot(d - a, dir);
    if (tc > td) std::swap(tc, td);
    const Rational lo = std::max(Rational(0), tc);
    const Rational hi = std::min(len2, td);
    if (lo >= hi) return std::nullopt;
    auto at = [&](const Rational& t) { return a + (t / len2) * dir; };
    return std::make_pair(at(lo), at(hi));
}

Rational edge_param(const ConvexPolygon& poly, std::size_t edge, const Point& p) {
    const Point c = poly.vertex(edge);
    const Point dir = poly.vertex(edge + 1) - c;
    return make_rational(static_cast<long>(edge), 1) + dot(p - c, dir) / dot(dir, dir);
}

std::vector<std::pair<Rational, Rational>> merge_cyclic_intervals(
    std::vector<std::pair<Rational, Rational>> ivs, const Rational& period) {
    if (ivs.empty()) return ivs;
    std::sort(ivs.begin(), ivs.end());
    std::vector<std::pair<Rational, Rational>> merged;
    for (const auto& iv : ivs) {
        if (!merged.empty() && iv.first <= merged.back().second) {
            if (iv.second > merged.back().second) merged.back().second = iv.second;
        } else {
            merged.push_back(iv);
        }
    }
    if (merged.size() >= 2 && merged.front().first == 0 && merged.back().second == period) {
        merged.back().second = period + merged.front().second;
        merged.erase(merged.begin());
    }
    for (const auto& iv : merged) {
        if (iv.second - iv.first >= period) {
            throw InvariantViolation("petal interval covers the entire core boundary");
        }
    }
    return merged;
}

// Merged cyclic stretches of the core boundary touched by the region's cell
// edges with positive length.
std::vector<std::pair<Rational, Rational>> boundary_intervals(const Region& region,
                                                              const ConvexPolygon& core) {
    std::vector<std::pair<Rational, Rational>> raw;
    for (const ConvexPolygon& cell : region.cells) {
        for (std::size_t i = 0; i < cell.size(); ++i) {
            const Point a = cell.vertex(i);
            const Point b = cell.vertex(i + 1);
            for (std::size_t j = 0; j < core.size(); ++j) {
                const auto overlap = collinear_overlap(a, b, core.vertex(j), core.vertex(j + 1));
                if (!overlap) continue;
                Rational t1 = edge_param(core, j, overlap->first);
                Rational t2 = edge_param(core, j, overlap->second);
                if (t2 < t1) std::swap(t1, t2);
                raw.emplace_back(std::move(t1), std::move(t2));
            }
        }
    }
    return merge_cyclic_intervals(std::move(raw), make_rational(static_cast<long>(core.size()), 1));
}

std::vector<Petal> build_petals(const ConvexPolygon& self, const ConvexPolygon& partner,
                                const ConvexPolygon& partner_parent, const ConvexPolygon& core) {
    const Region rest = region_subtract(Region::from(self), partner);
    std::vector<Petal> petals;
    for (Region& component : connected_components(rest)) {
        Petal petal;
        petal.cells = std::move(component);
        petal.active = !region_contained_in(petal.cells, partner_parent);
        petal.intervals = boundary_intervals(petal.cells, core);
        petals.push_back(std::move(petal));
    }
    return petals;
}

bool segment_on_boundary(const ConvexPolygon& poly, const Point& p, const Point& q) {
    // Three collinear boundary points of a convex set pin the whole segment
    // to the boundary.
    return locate_point(poly, p) == PointLocation::Boundary &&
           locate_point(poly, q) == PointLocation::Boundary &&
           locate_point(poly, midpoint(p, q)) == PointLocation::Boundary;
}

}  // namespace

PetalClassification classify_petals(const ConvexPolygon& u0, const ConvexPolygon& v0,
                                    const ConvexPolygon& u_parent,
                                    const ConvexPolygon& v_parent) {
    if (!contains_polygon(u_parent, u0)) throw InvalidParams("u0 must lie inside u_parent");
    if (!contains_polygon(v_parent, v0)) throw InvalidParams("v0 must lie inside v_parent");
    if (!interiors_intersect(u0, v0)) {
        throw InvalidParams("petal classification needs overlapping interiors");
    }
    if (u0 == v0) {
        return PetalClassification{u0, {}, {}, {}};  // nothing uncovered either way
    }

    auto core = convex_intersect(u0, v0);
    if (!core) throw InvariantViolation("overlapping interiors without a core polygon");

    std::vector<Point> crossings = boundary_crossing_points(u0, v0);
    if (crossings.empty()) throw InvalidParams("one object is nested inside the other");
    std::vector<std::pair<Rational, Point>> keyed;
    for (Point& pt : crossings) {
        const auto t = boundary_parameter(*core, pt);
        if (!t) throw InvariantViolation("boundary crossing is off the core boundary");
        keyed.emplace_back(*t, std::move(pt));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    crossings.clear();
    for (auto& [t, pt] : keyed) crossings.push_back(std::move(pt));

    PetalClassification out{std::move(*core), std::move(crossings), {}, {}};
    out.u_petals = build_petals(u0, v0, v_parent, out.core);
    out.v_petals = build_petals(v0, u0, u_parent, out.core);

    // Conflict test: tags of active intervals must not alternate U,V,U,V
    // around the core (that pattern admits no separating edge).
    std::vector<std::pair<Rational, int>> tags;
    for (const Petal& petal : out.u_petals) {
        if (!petal.active) continue;
        for (const auto& iv : petal.intervals) tags.emplace_back(iv.first, 0);
    }
    for (const Petal& petal : out.v_petals) {
        if (!petal.active) continue;
        for (const auto& iv : petal.intervals) tags.emplace_back(iv.first, 1);
    }
    if (tags.size() >= 4) {
        std::sort(tags.begin(), tags.end());
        std::size_t changes = 0;
        for (std::size_t i = 0; i < tags.size(); ++i) {
            if (tags[i].second != tags[(i + 1) % tags.size()].second) ++changes;
        }
        if (changes >= 4) {
            throw ConflictingCO("active petal intervals alternate around the core");
        }
    }
    return out;
}

SeparationResult separating_edge(const ConvexPolygon& u0, const ConvexPolygon& v0,
                                 const ConvexPolygon& u_parent, const ConvexPolygon& v_parent,
                                 const Region* u_exclusive, const Region* v_exclusive) {
    const PetalClassification pc = classify_petals(u0, v0, u_parent, v_parent);
    const ConvexPolygon& core = pc.core;
    const Rational period = make_rational(static_cast<long>(core.size()), 1);

    struct Item {
        Rational start;
        Rational length;
        bool is_u;
    };
    std::vector<Item> intervals;
    auto collect = [&](const std::vector<Petal>& petals, bool is_u) {
        for (const Petal& petal : petals) {
            if (!petal.active) continue;
            for (const auto& iv : petal.intervals) {
                intervals.push_back(Item{iv.first, iv.second - iv.first, is_u});
            }
        }
    };
    collect(pc.u_petals, true);
    collect(pc.v_petals, false);

    std::vector<Rational> params;
    for (const Point& pt : pc.crossings) params.push_back(*boundary_parameter(core, pt));

    auto arc_contains = [&](const Rational& from, const Rational& span, const Item& iv) {
        const Rational rel = rational_mod(iv.start - from, period);
        return rel + iv.length <= span;
    };

    for (std::size_t pi = 0; pi < pc.crossings.size(); ++pi) {
        for (std::size_t qi = 0; qi < pc.crossings.size(); ++qi) {
            if (qi == pi) continue;
            const Rational span_u = rational_mod(params[qi] - params[pi], period);
            if (span_u == 0) continue;
            const Rational span_v = period - span_u;
            bool split_ok = true;
            for (const Item& iv : intervals) {
                const bool inside = iv.is_u ? arc_contains(params[pi], span_u, iv)
                                            : arc_contains(params[qi], span_v, iv);
                if (!inside) {
                    split_ok = false;
                    break;
                }
            }
            if (!split_ok) continue;

            const Point& p = pc.crossings[pi];
            const Point& q = pc.crossings[qi];
            auto first_side = [&](const std::vector<Petal>& petals) -> std::optional<Orientation> {
                for (const Petal& petal : petals) {
                    if (!petal.active) continue;
                    for (const ConvexPolygon& cell : petal.cells.cells) {
                        for (const Point& v : cell.vertices()) {
                            const Orientation o = orientation(p, q, v);
                            if (o != Orientation::Collinear) return o;
                        }
                    }
                }
                return std::nullopt;
            };

            std::vector<Orientation> side_candidates;
            if (const auto u_side = first_side(pc.u_petals)) {
                side_candidates = {*u_side};
            } else if (const auto v_side = first_side(pc.v_petals)) {
                side_candidates = {*v_side == Orientation::Left ? Orientation::Right
                                                                : Orientation::Left};
            } else {
                side_candidates = {Orientation::Left, Orientation::Right};
            }

            for (const Orientation side : side_candidates) {
                const HalfPlane hu = side == Orientation::Left ? halfplane_left_of(p, q)
                                                               : halfplane_left_of(q, p);
                const HalfPlane hv = hu.complement();
                const auto u_part = clip_halfplane(u0, hu);
                const auto v_part = clip_halfplane(v0, hv);
                if (!u_part || !v_part) continue;
                if (interiors_intersect(*u_part, *v_part)) continue;
                if (!segment_on_boundary(*u_part, p, q)) continue;
                if (!segment_on_boundary(*v_part, p, q)) continue;
                if (!region_contained_in(region_subtract(Region::from(u0), *u_part), v_parent)) {
                    continue;
                }
                if (!region_contained_in(region_subtract(Region::from(v0), *v_part), u_parent)) {
                    continue;
                }
                if (u_exclusive != nullptr && !region_contained_in(*u_exclusive, *u_part)) {
                    continue;
                }
                if (v_exclusive != nullptr && !region_contained_in(*v_exclusive, *v_part)) {
                    continue;
                }
                return SeparationResult{*u_part, *v_part, SeparatingEdge{p, q, hu, hv}};
            }
        }
    }
    throw NoSeparator("no crossing pair separates the active petal intervals");
}

}  // namespace geoset
