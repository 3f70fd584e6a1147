#include "geoset/region.hpp"

#include <numeric>

namespace geoset {

Rational Region::area() const {
    Rational sum = 0;
    for (const ConvexPolygon& c : cells) sum += c.area();
    return sum;
}

Region Region::from(ConvexPolygon poly) {
    Region r;
    r.cells.push_back(std::move(poly));
    return r;
}

namespace {

// Appends the parts of `cell` outside interior(poly). The pieces are carved
// off edge by edge, so they are pairwise interior-disjoint and their areas
// plus area(cell & poly) telescope exactly to area(cell).
void subtract_cell(const ConvexPolygon& cell, const ConvexPolygon& poly,
                   std::vector<ConvexPolygon>& out) {
    if (!interiors_intersect(cell, poly)) {
        out.push_back(cell);
        return;
    }
    std::optional<ConvexPolygon> rest = cell;
    for (std::size_t i = 0; i < poly.size() && rest; ++i) {
        const HalfPlane h = poly.edge_halfplane(i);
        if (auto piece = clip_halfplane(*rest, h.complement())) {
            out.push_back(std::move(*piece));
        }
        rest = clip_halfplane(*rest, h);
    }
    // what remains of `rest` is cell & poly and is dropped
}

}  // namespace

Region region_subtract(const Region& region, const ConvexPolygon& poly) {
    Region out;
    for (const ConvexPolygon& cell : region.cells) {
        subtract_cell(cell, poly, out.cells);
    }
    return out;
}

bool region_contained_in(const Region& region, const ConvexPolygon& poly) {
    for (const ConvexPolygon& cell : region.cells) {
        if (!contains_polygon(poly, cell)) return false;
    }
    return true;
}

namespace {

bool cells_share_edge(const ConvexPolygon& a, const ConvexPolygon& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (segments_overlap_positively(a.vertex(i), a.vertex(i + 1),
                                            b.vertex(j), b.vertex(j + 1))) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

std::vector<Region> connected_components(const Region& region) {
    const std::size_t n = region.cells.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (cells_share_edge(region.cells[i], region.cells[j])) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<Region> comps;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<long>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<std::size_t>(slot[root])].cells.push_back(region.cells[i]);
    }
    return comps;
}

Rational union_area(const std::vector<ConvexPolygon>& polys) {
    Region acc;
    for (const ConvexPolygon& p : polys) {
        Region add = Region::from(p);
        for (const ConvexPolygon& cell : acc.cells) {
            if (add.empty()) break;
            add = region_subtract(add, cell);
        }
        for (ConvexPolygon& c : add.cells) acc.cells.push_back(std::move(c));
    }
    return acc.area();
}

}  // namespace geoset
