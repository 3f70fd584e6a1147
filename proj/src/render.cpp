#include "geoset/render.hpp"

#include <sstream>

#include "geoset/errors.hpp"

namespace geoset {

Scene scene_from_instance(const Instance& instance) {
    Scene scene;
    scene.objects = instance_polygons(instance);
    if (const auto* cover = std::get_if<CoverInstance>(&instance)) {
        scene.points = cover->points;
    }
    return scene;
}

void add_highlight(Scene& scene, const std::vector<std::size_t>& indices) {
    for (const std::size_t i : indices) {
        if (i >= scene.objects.size()) {
            throw InvariantViolation("highlight index " + std::to_string(i) +
                                     " is out of range");
        }
        scene.highlighted.push_back(i);
    }
}

void add_decomposition(Scene& scene, const DecompositionResult& result) {
    for (const ConvexPolygon& piece : result.tilde) scene.outlines.push_back(piece);
    for (const ChordRecord& chord : result.chords) {
        scene.segments.emplace_back(chord.p1, chord.p2);
    }
}

namespace {

struct Bounds {
    bool any = false;
    Rational xmin, xmax, ymin, ymax;

    void add(const Point& p) {
        if (!any) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
            any = true;
            return;
        }
        if (p.x < xmin) xmin = p.x;
        if (p.x > xmax) xmax = p.x;
        if (p.y < ymin) ymin = p.y;
        if (p.y > ymax) ymax = p.y;
    }

    void add(const ConvexPolygon& poly) {
        const auto& b = poly.bbox();
        add(Point{b.xmin, b.ymin});
        add(Point{b.xmax, b.ymax});
    }
};

std::string dec(const Rational& value) { return to_decimal_string(value, 9); }

// SVG y grows downward; the scene is emitted with y mirrored so the picture
// matches the usual mathematical orientation.
void emit_polygon(std::ostream& out, const ConvexPolygon& poly, const char* style) {
    out << "<polygon points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (i > 0) out << ' ';
        const Point& v = poly.vertex(i);
        out << dec(v.x) << ',' << dec(-v.y);
    }
    out << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const Scene& scene) {
    Bounds bounds;
    for (const ConvexPolygon& poly : scene.objects) bounds.add(poly);
    for (const Region& region : scene.regions) {
        for (const ConvexPolygon& cell : region.cells) bounds.add(cell);
    }
    for (const ConvexPolygon& poly : scene.outlines) bounds.add(poly);
    for (const auto& [a, b] : scene.segments) {
        bounds.add(a);
        bounds.add(b);
    }
    for (const Point& p : scene.points) bounds.add(p);
    if (!bounds.any) {
        bounds.add(Point{Rational(0), Rational(0)});
        bounds.add(Point{Rational(1), Rational(1)});
    }

    const Rational width = bounds.xmax - bounds.xmin;
    const Rational height = bounds.ymax - bounds.ymin;
    Rational span = width > height ? width : height;
    if (sign(span) == 0) span = 1;
    const Rational margin = span / 20;
    const Rational view_w = width + 2 * margin;
    const Rational view_h = height + 2 * margin;
    const Rational thin = span / 200;
    const Rational thick = span / 100;
    const Rational dot = span / 80;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << dec(bounds.xmin - margin) << ' ' << dec(-bounds.ymax - margin) << ' '
        << dec(view_w) << ' ' << dec(view_h) << "\" width=\"800\" height=\""
        << to_decimal_string(Rational(800) * view_h / view_w, 2) << "\">\n";

    const std::string obj_style = "fill=\"#9ecae1\" fill-opacity=\"0.35\" stroke=\"#3182bd\" "
                                  "stroke-width=\"" + dec(thin) + "\"";
    const std::string hi_style = "fill=\"#fdae6b\" fill-opacity=\"0.55\" stroke=\"#e6550d\" "
                                 "stroke-width=\"" + dec(thick) + "\"";
    const std::string region_style = "fill=\"#a1d99b\" fill-opacity=\"0.6\" stroke=\"#31a354\" "
                                     "stroke-width=\"" + dec(thin) + "\"";
    const std::string outline_style = "fill=\"none\" stroke=\"#756bb1\" stroke-width=\"" +
                                      dec(thick) + "\"";

    out << "<g id=\"objects\">\n";
    for (const ConvexPolygon& poly : scene.objects) {
        emit_polygon(out, poly, obj_style.c_str());
    }
    out << "</g>\n";

    out << "<g id=\"highlight\">\n";
    for (const std::size_t i : scene.highlighted) {
        emit_polygon(out, scene.objects[i], hi_style.c_str());
    }
    out << "</g>\n";

    out << "<g id=\"regions\">\n";
    for (const Region& region : scene.regions) {
        for (const ConvexPolygon& cell : region.cells) {
            emit_polygon(out, cell, region_style.c_str());
        }
    }
    out << "</g>\n";

    out << "<g id=\"outlines\">\n";
    for (const ConvexPolygon& poly : scene.outlines) {
        emit_polygon(out, poly, outline_style.c_str());
    }
    out << "</g>\n";

    out << "<g id=\"segments\">\n";
    for (const auto& [a, b] : scene.segments) {
        out << "<line x1=\"" << dec(a.x) << "\" y1=\"" << dec(-a.y) << "\" x2=\"" << dec(b.x)
            << "\" y2=\"" << dec(-b.y) << "\" stroke=\"#d62728\" stroke-width=\"" << dec(thick)
            << "\" stroke-linecap=\"round\"/>\n";
    }
    out << "</g>\n";

    out << "<g id=\"points\">\n";
    for (const Point& p : scene.points) {
        out << "<circle cx=\"" << dec(p.x) << "\" cy=\"" << dec(-p.y) << "\" r=\"" << dec(dot)
            << "\" fill=\"#252525\"/>\n";
    }
    out << "</g>\n";

    out << "</svg>\n";
    return out.str();
}

}  // namespace geoset
