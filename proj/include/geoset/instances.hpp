#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "geoset/polygon.hpp"

namespace geoset {

using Seed = std::uint64_t;

// A convex shape together with a designated interior center point; homothets
// are expressed relative to it.
struct BaseShape {
    ConvexPolygon polygon;
    Point center;
};

// Throws InvariantViolation unless center is strictly interior.
BaseShape make_base_shape(ConvexPolygon polygon, Point center);

// Unit square [0,1]^2 with center (1/2, 1/2).
BaseShape base_square();

// Convex k-gon with vertices on a rational grid approximating the regular
// k-gon inscribed in the unit circle (coordinates snapped to denominator
// 4096), centered at the origin. Throws InvalidParams for k < 3.
BaseShape base_regular_polygon(int k);

// A translated, positively scaled copy of a base shape.
struct Homothet {
    Point center;
    Rational scale;  // > 0
};

// Maps base vertex v to h.center + h.scale * (v - base.center).
// Throws InvariantViolation if scale <= 0.
ConvexPolygon instantiate(const BaseShape& base, const Homothet& h);

// Flat, ordered key/value provenance block echoing generator settings;
// serialized verbatim so instance files round-trip byte-exactly.
using ParamsNote = std::vector<std::pair<std::string, std::string>>;

struct DominationInstance {
    BaseShape base;
    std::vector<Homothet> objects;  // nonempty
    std::optional<Seed> seed;       // provenance only
    ParamsNote params;              // provenance only
};

struct CoverInstance {
    std::vector<ConvexPolygon> objects;  // convex pseudodisk family
    std::vector<Point> points;           // each covered by >= 1 object
    std::optional<Seed> seed;            // provenance only
    ParamsNote params;                   // provenance only
};

using Instance = std::variant<DominationInstance, CoverInstance>;

// Expanded object polygons, in index order, for either instance kind.
std::vector<ConvexPolygon> instance_polygons(const Instance& instance);
std::vector<ConvexPolygon> instance_polygons(const DominationInstance& instance);

// ---------------------------------------------------------------------------
// Generators. Deterministic for a fixed (params, seed) pair: all randomness
// comes from one mt19937_64 stream consumed through portable rejection draws.
// ---------------------------------------------------------------------------

enum class ShapeKind { Square, RegularKGon, Custom };

struct DominationGenParams {
    std::size_t n = 1;
    ShapeKind kind = ShapeKind::Square;
    int k = 6;                                 // RegularKGon only
    std::optional<BaseShape> custom;           // Custom only
    Rational scale_min = Rational(1) / 2;
    Rational scale_max = 2;
    Rational extent = 10;                      // centers drawn from [0, extent]^2
    unsigned center_denom = 64;                // grid denominators, <= 2^16
    unsigned scale_denom = 16;
};

// Throws InvalidParams on bad parameters.
DominationInstance gen_domination(const DominationGenParams& params, Seed seed);

enum class CoverObjectKind { SquareHomothets, KGonHomothets, Rectangles };

struct CoverGenParams {
    std::size_t n_objects = 1;
    std::size_t n_points = 0;
    CoverObjectKind kind = CoverObjectKind::SquareHomothets;
    int k = 6;                                 // KGonHomothets only
    Rational scale_min = Rational(1) / 2;
    Rational scale_max = 2;
    Rational extent = 10;
    unsigned center_denom = 64;
    unsigned scale_denom = 16;
    std::size_t retry_budget = 1000;           // per object / per point
};

struct GenStats {
    std::size_t object_draws = 0;
    std::size_t rejected_crossings = 0;  // candidate crossed an accepted object > 2 times
    std::size_t rejected_overlap = 0;    // boundary-segment overlap with an accepted object
    std::size_t point_draws = 0;
};

// Rejection-samples a convex pseudodisk family plus points inside its union.
// Throws InvalidParams on bad parameters, GenerationExhausted when an object
// or point exceeds the retry budget.
CoverInstance gen_cover(const CoverGenParams& params, Seed seed, GenStats* stats = nullptr);

// Canonical kind names used in files and CLI flags ("square", "kgon",
// "custom"; "square-homothets", "kgon-homothets", "rect").
std::string shape_kind_name(ShapeKind kind);
ShapeKind parse_shape_kind(const std::string& name);  // throws InvalidParams
std::string cover_kind_name(CoverObjectKind kind);
CoverObjectKind parse_cover_kind(const std::string& name);  // throws InvalidParams

// ---------------------------------------------------------------------------
// Family validation
// ---------------------------------------------------------------------------

struct PseudodiskOffender {
    std::size_t i = 0;
    std::size_t j = 0;
    // Crossing count when countable; nullopt when the boundaries share a
    // positive-length segment (always an offense).
    std::optional<std::size_t> crossings;
};

// Empty result iff the family is a valid convex pseudodisk family.
std::vector<PseudodiskOffender> verify_pseudodisk_family(const std::vector<ConvexPolygon>& objects);

}  // namespace geoset
