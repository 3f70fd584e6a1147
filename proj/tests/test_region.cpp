#include <doctest.h>

#include "geoset/errors.hpp"
#include "geoset/region.hpp"
#include "support/test_support.hpp"

using namespace geoset;
namespace gt = geoset::testing;

namespace {

Point pt(long x, long y) { return Point{make_rational(x), make_rational(y)}; }

ConvexPolygon box(long x0, long y0, long x1, long y1) {
    return ConvexPolygon::from_vertices({pt(x0, y0), pt(x1, y0), pt(x1, y1), pt(x0, y1)});
}

bool region_cells_interior_disjoint(const Region& r) {
    for (std::size_t i = 0; i < r.cells.size(); ++i)
        for (std::size_t j = i + 1; j < r.cells.size(); ++j)
            if (interiors_intersect(r.cells[i], r.cells[j])) return false;
    return true;
}

}  // namespace

TEST_CASE("region_subtract basics") {
    const Region sq = Region::from(box(0, 0, 2, 2));

    SUBCASE("subtracting the polygon itself leaves nothing") {
        const Region out = region_subtract(sq, box(0, 0, 2, 2));
        CHECK(out.empty());
        CHECK(out.area() == 0);
    }
    SUBCASE("subtracting a disjoint polygon changes nothing") {
        const Region out = region_subtract(sq, box(5, 5, 6, 6));
        CHECK(out.area() == make_rational(4));
        CHECK(region_cells_interior_disjoint(out));
    }
    SUBCASE("subtracting an edge-touching polygon changes nothing") {
        const Region out = region_subtract(sq, box(2, 0, 3, 2));
        CHECK(out.area() == make_rational(4));
    }
    SUBCASE("corner bite leaves an L of area 3") {
        const Region out = region_subtract(sq, box(1, 1, 3, 3));
        CHECK(out.area() == make_rational(3));
        CHECK(region_cells_interior_disjoint(out));
        CHECK(connected_components(out).size() == 1);
    }
    SUBCASE("strip flush with the right side leaves half") {
        const Region out = region_subtract(sq, box(1, -1, 2, 3));
        CHECK(out.area() == make_rational(2));
    }
}

TEST_CASE("region_subtract splits into separate components") {
    const Region sq = Region::from(box(0, 0, 3, 3));
    // vertical strip through the middle
    const Region out = region_subtract(sq, box(1, -1, 2, 4));
    CHECK(out.area() == make_rational(6));
    CHECK(region_cells_interior_disjoint(out));
    const auto comps = connected_components(out);
    CHECK(comps.size() == 2);
    for (const auto& comp : comps) CHECK(comp.area() == make_rational(3));
}

TEST_CASE("region_subtract conserves area exactly over random sequences") {
    gt::Rng rng(314159);
    for (int iter = 0; iter < 60; ++iter) {
        const ConvexPolygon start = gt::rand_convex_polygon(rng);
        Region r = Region::from(start);
        Rational removed = 0;
        for (int k = 0; k < 4; ++k) {
            const ConvexPolygon cut = gt::rand_convex_polygon(rng);
            // area actually removed = sum over cells of |cell ∩ cut|
            Rational inter = 0;
            for (const auto& cell : r.cells) {
                if (const auto piece = convex_intersect(cell, cut)) inter += piece->area();
            }
            r = region_subtract(r, cut);
            removed += inter;
            CHECK(region_cells_interior_disjoint(r));
        }
        CHECK(r.area() == start.area() - removed);
    }
}

TEST_CASE("region_contained_in") {
    const Region l_shape = region_subtract(Region::from(box(0, 0, 2, 2)), box(1, 1, 3, 3));
    CHECK(region_contained_in(l_shape, box(0, 0, 2, 2)));
    CHECK(region_contained_in(l_shape, box(-1, -1, 5, 5)));
    CHECK_FALSE(region_contained_in(l_shape, box(0, 0, 1, 2)));
    CHECK(region_contained_in(Region{}, box(0, 0, 1, 1)));
}

TEST_CASE("connected_components joins only across shared edge segments") {
    SUBCASE("two cells sharing a full edge form one component") {
        Region r;
        r.cells = {box(0, 0, 1, 1), box(1, 0, 2, 1)};
        CHECK(connected_components(r).size() == 1);
    }
    SUBCASE("two cells sharing part of an edge form one component") {
        Region r;
        r.cells = {box(0, 0, 2, 1), box(1, 1, 3, 2)};
        CHECK(connected_components(r).size() == 1);
    }
    SUBCASE("corner contact does not join") {
        Region r;
        r.cells = {box(0, 0, 1, 1), box(1, 1, 2, 2)};
        CHECK(connected_components(r).size() == 2);
    }
    SUBCASE("disjoint cells stay apart") {
        Region r;
        r.cells = {box(0, 0, 1, 1), box(5, 0, 6, 1), box(0, 5, 1, 6)};
        CHECK(connected_components(r).size() == 3);
    }
    SUBCASE("chain of three merges transitively") {
        Region r;
        r.cells = {box(0, 0, 1, 1), box(1, 0, 2, 1), box(2, 0, 3, 1)};
        const auto comps = connected_components(r);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].area() == make_rational(3));
    }
}

TEST_CASE("union_area") {
    SUBCASE("two overlapping unit squares") {
        // |[0,1]^2 ∪ [1/2,3/2]x[0,1]| = 3/2
        const ConvexPolygon a = box(0, 0, 1, 1);
        const ConvexPolygon b = ConvexPolygon::from_vertices(
            {Point{make_rational(1, 2), make_rational(0)}, Point{make_rational(3, 2), make_rational(0)},
             Point{make_rational(3, 2), make_rational(1)}, Point{make_rational(1, 2), make_rational(1)}});
        CHECK(union_area({a, b}) == make_rational(3, 2));
    }
    SUBCASE("disjoint squares add up") {
        CHECK(union_area({box(0, 0, 1, 1), box(5, 5, 6, 6), box(9, 0, 10, 1)}) ==
              make_rational(3));
    }
    SUBCASE("nested squares count once") {
        CHECK(union_area({box(0, 0, 4, 4), box(1, 1, 2, 2)}) == make_rational(16));
    }
    SUBCASE("offset squares from the worked decomposition example") {
        CHECK(union_area({box(0, 0, 2, 2), box(1, 1, 3, 3)}) == make_rational(7));
    }
    SUBCASE("empty family") {
        CHECK(union_area({}) == 0);
    }
    SUBCASE("triple overlap via inclusion-exclusion cross-check") {
        gt::Rng rng(2718);
        for (int iter = 0; iter < 40; ++iter) {
            const ConvexPolygon a = gt::rand_convex_polygon(rng);
            const ConvexPolygon b = gt::rand_convex_polygon(rng);
            const ConvexPolygon c = gt::rand_convex_polygon(rng);
            auto inter_area = [](const std::optional<ConvexPolygon>& p) {
                return p ? p->area() : Rational(0);
            };
            const auto ab = convex_intersect(a, b);
            const auto ac = convex_intersect(a, c);
            const auto bc = convex_intersect(b, c);
            Rational abc = 0;
            if (ab) {
                if (const auto t = convex_intersect(*ab, c)) abc = t->area();
            }
            const Rational expect = a.area() + b.area() + c.area() - inter_area(ab) -
                                    inter_area(ac) - inter_area(bc) + abc;
            CHECK(union_area({a, b, c}) == expect);
        }
    }
}
