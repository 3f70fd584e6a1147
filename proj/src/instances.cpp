#include "geoset/instances.hpp"

#include <cmath>

#include "geoset/errors.hpp"
#include "geoset/random.hpp"

namespace geoset {

BaseShape make_base_shape(ConvexPolygon polygon, Point center) {
    if (locate_point(polygon, center) != PointLocation::Interior)
        throw InvariantViolation("base-shape center must be strictly interior");
    return BaseShape{std::move(polygon), std::move(center)};
}

BaseShape base_square() {
    const Rational z = 0, o = 1;
    ConvexPolygon square = ConvexPolygon::from_vertices(
        {Point{z, z}, Point{o, z}, Point{o, o}, Point{z, o}});
    return make_base_shape(std::move(square), Point{make_rational(1, 2), make_rational(1, 2)});
}

BaseShape base_regular_polygon(int k) {
    if (k < 3 || k > 64) throw InvalidParams("regular polygon needs 3 <= k <= 64");
    constexpr long kSnapDen = 4096;
    std::vector<Point> verts;
    verts.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double angle = 2.0 * 3.14159265358979323846 * i / k;
        verts.push_back(Point{make_rational(std::lround(std::cos(angle) * kSnapDen), kSnapDen),
                              make_rational(std::lround(std::sin(angle) * kSnapDen), kSnapDen)});
    }
    return make_base_shape(ConvexPolygon::from_vertices(std::move(verts)), Point{0, 0});
}

ConvexPolygon instantiate(const BaseShape& base, const Homothet& h) {
    if (sign(h.scale) <= 0) throw InvariantViolation("homothet scale must be positive");
    std::vector<Point> verts;
    verts.reserve(base.polygon.size());
    for (const Point& v : base.polygon.vertices())
        verts.push_back(h.center + h.scale * (v - base.center));
    return ConvexPolygon::from_vertices(std::move(verts));
}

std::vector<ConvexPolygon> instance_polygons(const DominationInstance& instance) {
    std::vector<ConvexPolygon> polys;
    polys.reserve(instance.objects.size());
    for (const Homothet& h : instance.objects) polys.push_back(instantiate(instance.base, h));
    return polys;
}

std::vector<ConvexPolygon> instance_polygons(const Instance& instance) {
    if (const auto* dom = std::get_if<DominationInstance>(&instance))
        return instance_polygons(*dom);
    return std::get<CoverInstance>(instance).objects;
}

namespace {

void check_common_params(const Rational& scale_min, const Rational& scale_max,
                         const Rational& extent, unsigned center_denom, unsigned scale_denom) {
    if (sign(scale_min) <= 0 || scale_max < scale_min)
        throw InvalidParams("scale range must satisfy 0 < min <= max");
    if (sign(extent) <= 0) throw InvalidParams("extent must be positive");
    if (center_denom == 0 || center_denom > 65536 || scale_denom == 0 || scale_denom > 65536)
        throw InvalidParams("grid denominators must lie in [1, 65536]");
}

Point draw_center(Rng& rng, const Rational& extent, unsigned denom) {
    const Rational x = rand_rational(rng, 0, extent, denom);
    const Rational y = rand_rational(rng, 0, extent, denom);
    return Point{x, y};
}

}  // namespace

DominationInstance gen_domination(const DominationGenParams& params, Seed seed) {
    if (params.n < 1) throw InvalidParams("n must be at least 1");
    check_common_params(params.scale_min, params.scale_max, params.extent,
                        params.center_denom, params.scale_denom);

    BaseShape base = [&] {
        switch (params.kind) {
            case ShapeKind::Square: return base_square();
            case ShapeKind::RegularKGon: return base_regular_polygon(params.k);
            case ShapeKind::Custom:
                if (!params.custom) throw InvalidParams("custom kind requires a base shape");
                return *params.custom;
        }
        throw InvalidParams("unknown shape kind");
    }();

    Rng rng(seed);
    DominationInstance instance{std::move(base), {}, seed, {}};
    instance.objects.reserve(params.n);
    for (std::size_t i = 0; i < params.n; ++i) {
        Point center = draw_center(rng, params.extent, params.center_denom);
        Rational scale = rand_rational(rng, params.scale_min, params.scale_max, params.scale_denom);
        instance.objects.push_back(Homothet{std::move(center), std::move(scale)});
    }

    instance.params = {{"n", std::to_string(params.n)}, {"kind", shape_kind_name(params.kind)}};
    if (params.kind == ShapeKind::RegularKGon)
        instance.params.emplace_back("k", std::to_string(params.k));
    instance.params.insert(instance.params.end(),
                           {{"scale_min", to_string(params.scale_min)},
                            {"scale_max", to_string(params.scale_max)},
                            {"extent", to_string(params.extent)},
                            {"center_denom", std::to_string(params.center_denom)},
                            {"scale_denom", std::to_string(params.scale_denom)}});
    return instance;
}

std::string shape_kind_name(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::Square: return "square";
        case ShapeKind::RegularKGon: return "kgon";
        case ShapeKind::Custom: return "custom";
    }
    throw InvalidParams("unknown shape kind");
}

ShapeKind parse_shape_kind(const std::string& name) {
    if (name == "square") return ShapeKind::Square;
    if (name == "kgon") return ShapeKind::RegularKGon;
    if (name == "custom") return ShapeKind::Custom;
    throw InvalidParams("unknown shape kind: " + name);
}

std::string cover_kind_name(CoverObjectKind kind) {
    switch (kind) {
        case CoverObjectKind::SquareHomothets: return "square-homothets";
        case CoverObjectKind::KGonHomothets: return "kgon-homothets";
        case CoverObjectKind::Rectangles: return "rect";
    }
    throw InvalidParams("unknown cover object kind");
}

CoverObjectKind parse_cover_kind(const std::string& name) {
    if (name == "square-homothets") return CoverObjectKind::SquareHomothets;
    if (name == "kgon-homothets") return CoverObjectKind::KGonHomothets;
    if (name == "rect") return CoverObjectKind::Rectangles;
    throw InvalidParams("unknown cover object kind: " + name);
}

namespace {

// True when candidate may join the accepted family: every pair crosses at
// most twice and no boundary segments coincide.
bool pseudodisk_compatible(const ConvexPolygon& candidate,
                           const std::vector<ConvexPolygon>& accepted, GenStats& stats) {
    for (const ConvexPolygon& other : accepted) {
        try {
            if (boundary_crossings(candidate, other) > 2) {
                ++stats.rejected_crossings;
                return false;
            }
        } catch (const DegenerateOverlap&) {
            ++stats.rejected_overlap;
            return false;
        }
    }
    return true;
}

}  // namespace

CoverInstance gen_cover(const CoverGenParams& params, Seed seed, GenStats* stats_out) {
    if (params.n_objects < 1) throw InvalidParams("n_objects must be at least 1");
    if (params.retry_budget < 1) throw InvalidParams("retry budget must be positive");
    check_common_params(params.scale_min, params.scale_max, params.extent,
                        params.center_denom, params.scale_denom);

    std::optional<BaseShape> base;
    if (params.kind == CoverObjectKind::SquareHomothets)
        base = base_square();
    else if (params.kind == CoverObjectKind::KGonHomothets)
        base = base_regular_polygon(params.k);

    GenStats stats;
    Rng rng(seed);
    CoverInstance instance;
    instance.seed = seed;
    instance.objects.reserve(params.n_objects);

    for (std::size_t i = 0; i < params.n_objects; ++i) {
        bool accepted = false;
        for (std::size_t attempt = 0; attempt < params.retry_budget; ++attempt) {
            ++stats.object_draws;
            ConvexPolygon candidate = [&] {
                if (base) {
                    Point center = draw_center(rng, params.extent, params.center_denom);
                    Rational scale =
                        rand_rational(rng, params.scale_min, params.scale_max, params.scale_denom);
                    return instantiate(*base, Homothet{std::move(center), std::move(scale)});
                }
                const Point corner = draw_center(rng, params.extent, params.center_denom);
                const Rational w =
                    rand_rational(rng, params.scale_min, params.scale_max, params.scale_denom);
                const Rational h =
                    rand_rational(rng, params.scale_min, params.scale_max, params.scale_denom);
                return ConvexPolygon::from_vertices({corner,
                                                     Point{corner.x + w, corner.y},
                                                     Point{corner.x + w, corner.y + h},
                                                     Point{corner.x, corner.y + h}});
            }();
            if (pseudodisk_compatible(candidate, instance.objects, stats)) {
                instance.objects.push_back(std::move(candidate));
                accepted = true;
                break;
            }
        }
        if (!accepted)
            throw GenerationExhausted("could not place a pseudodisk-compatible object within budget");
    }

    instance.points.reserve(params.n_points);
    for (std::size_t i = 0; i < params.n_points; ++i) {
        bool accepted = false;
        for (std::size_t attempt = 0; attempt < params.retry_budget; ++attempt) {
            ++stats.point_draws;
            const ConvexPolygon& host =
                instance.objects[rand_below(rng, instance.objects.size())];
            const auto& box = host.bbox();
            Point p{rand_rational(rng, box.xmin, box.xmax, params.center_denom),
                    rand_rational(rng, box.ymin, box.ymax, params.center_denom)};
            if (locate_point(host, p) != PointLocation::Outside) {
                instance.points.push_back(std::move(p));
                accepted = true;
                break;
            }
        }
        if (!accepted) throw GenerationExhausted("could not sample a covered point within budget");
    }

    instance.params = {{"n_objects", std::to_string(params.n_objects)},
                       {"n_points", std::to_string(params.n_points)},
                       {"kind", cover_kind_name(params.kind)}};
    if (params.kind == CoverObjectKind::KGonHomothets)
        instance.params.emplace_back("k", std::to_string(params.k));
    instance.params.insert(instance.params.end(),
                           {{"scale_min", to_string(params.scale_min)},
                            {"scale_max", to_string(params.scale_max)},
                            {"extent", to_string(params.extent)},
                            {"center_denom", std::to_string(params.center_denom)},
                            {"scale_denom", std::to_string(params.scale_denom)},
                            {"retry_budget", std::to_string(params.retry_budget)}});

    if (stats_out) *stats_out = stats;
    return instance;
}

std::vector<PseudodiskOffender> verify_pseudodisk_family(
    const std::vector<ConvexPolygon>& objects) {
    std::vector<PseudodiskOffender> offenders;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        for (std::size_t j = i + 1; j < objects.size(); ++j) {
            try {
                const std::size_t c = boundary_crossings(objects[i], objects[j]);
                if (c > 2) offenders.push_back(PseudodiskOffender{i, j, c});
            } catch (const DegenerateOverlap&) {
                offenders.push_back(PseudodiskOffender{i, j, std::nullopt});
            }
        }
    }
    return offenders;
}

}  // namespace geoset
