#pragma once

#include <string>
#include <utility>
#include <vector>

#include "geoset/decomposition.hpp"
#include "geoset/instances.hpp"
#include "geoset/region.hpp"

namespace geoset {

// What to draw, in paint order (later layers end up on top): the instance
// objects, a highlighted subset, filled region cells (e.g. exclusive
// coverage), emphasized outlines (e.g. decomposition pieces), straight
// segments (chords, separating edges), and cover points.
struct Scene {
    std::vector<ConvexPolygon> objects;
    std::vector<std::size_t> highlighted;  // indices into objects
    std::vector<Region> regions;
    std::vector<ConvexPolygon> outlines;
    std::vector<std::pair<Point, Point>> segments;
    std::vector<Point> points;
};

// Objects plus, for cover instances, the points.
Scene scene_from_instance(const Instance& instance);

// Marks solution objects; throws InvariantViolation on out-of-range indices.
void add_highlight(Scene& scene, const std::vector<std::size_t>& indices);

// Adds the shrunken pieces as outlines and one segment per recorded chord.
void add_decomposition(Scene& scene, const DecompositionResult& result);

// Deterministic standalone SVG 1.1 document. Exact coordinates are rounded
// to 9 decimal digits here and nowhere else.
std::string render_svg(const Scene& scene);

}  // namespace geoset
