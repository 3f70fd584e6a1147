#include <doctest.h>

#include <cstdio>

#include "geoset/errors.hpp"
#include "geoset/instances.hpp"
#include "geoset/json_io.hpp"
#include "support/test_support.hpp"

using namespace geoset;

namespace {

Point pt(long x, long y) { return Point{make_rational(x), make_rational(y)}; }

ConvexPolygon box(long x0, long y0, long x1, long y1) {
    return ConvexPolygon::from_vertices({pt(x0, y0), pt(x1, y0), pt(x1, y1), pt(x0, y1)});
}

Point ptq(const char* x, const char* y) {
    return Point{rational_from_string(x), rational_from_string(y)};
}

}  // namespace

TEST_CASE("instantiate maps base vertices affinely") {
    const BaseShape sq = base_square();

    SUBCASE("scale 2 at (2,2) gives [1,3]^2") {
        CHECK(instantiate(sq, Homothet{pt(2, 2), make_rational(2)}) == box(1, 3 - 2, 3, 3));
    }
    SUBCASE("identity homothet reproduces the base") {
        CHECK(instantiate(sq, Homothet{sq.center, make_rational(1)}) == sq.polygon);
    }
    SUBCASE("triangle example, scale 1/2 at origin") {
        const BaseShape tri = make_base_shape(
            ConvexPolygon::from_vertices({pt(0, 0), pt(2, 0), pt(0, 2)}),
            ptq("1/2", "1/2"));
        const ConvexPolygon out = instantiate(tri, Homothet{pt(0, 0), make_rational(1, 2)});
        CHECK(out == ConvexPolygon::from_vertices({ptq("-1/4", "-1/4"), ptq("3/4", "-1/4"),
                                                   ptq("-1/4", "3/4")}));
    }
    SUBCASE("nonpositive scale is rejected") {
        CHECK_THROWS_AS(instantiate(sq, Homothet{pt(0, 0), make_rational(0)}),
                        InvariantViolation);
        CHECK_THROWS_AS(instantiate(sq, Homothet{pt(0, 0), make_rational(-1)}),
                        InvariantViolation);
    }
}

TEST_CASE("base shape construction") {
    CHECK(base_square().polygon == box(0, 0, 1, 1));
    CHECK_THROWS_AS(make_base_shape(box(0, 0, 2, 2), pt(0, 1)), InvariantViolation);
    CHECK_THROWS_AS(make_base_shape(box(0, 0, 2, 2), pt(5, 5)), InvariantViolation);

    for (int k = 3; k <= 12; ++k) {
        const BaseShape gon = base_regular_polygon(k);
        CHECK(gon.polygon.size() == static_cast<std::size_t>(k));
        CHECK(locate_point(gon.polygon, pt(0, 0)) == PointLocation::Interior);
    }
    CHECK_THROWS_AS(base_regular_polygon(2), InvalidParams);
    CHECK_THROWS_AS(base_regular_polygon(100), InvalidParams);
}

TEST_CASE("gen_domination determinism and shape") {
    DominationGenParams params;
    params.n = 8;
    params.kind = ShapeKind::RegularKGon;
    params.k = 5;

    const DominationInstance a = gen_domination(params, 1234);
    const DominationInstance b = gen_domination(params, 1234);
    CHECK(instance_to_json(Instance{a}).dump() == instance_to_json(Instance{b}).dump());

    const DominationInstance c = gen_domination(params, 1235);
    CHECK(instance_to_json(Instance{a}).dump() != instance_to_json(Instance{c}).dump());

    CHECK(a.objects.size() == 8);
    for (const Homothet& h : a.objects) {
        CHECK(sign(h.scale) > 0);
        CHECK(h.scale >= params.scale_min);
        CHECK(h.scale <= params.scale_max);
    }
}

TEST_CASE("gen_domination with tiny extent yields a complete intersection graph") {
    DominationGenParams params;
    params.n = 3;
    params.extent = 1;
    params.scale_min = params.scale_max = 2;
    const DominationInstance inst = gen_domination(params, 7);
    const auto polys = instance_polygons(inst);
    REQUIRE(polys.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(touches(polys[i], polys[j]));
}

TEST_CASE("gen_domination parameter validation") {
    DominationGenParams p;
    p.n = 0;
    CHECK_THROWS_AS(gen_domination(p, 1), InvalidParams);
    p = {};
    p.scale_min = 0;
    CHECK_THROWS_AS(gen_domination(p, 1), InvalidParams);
    p = {};
    p.scale_min = 2;
    p.scale_max = 1;
    CHECK_THROWS_AS(gen_domination(p, 1), InvalidParams);
    p = {};
    p.extent = -1;
    CHECK_THROWS_AS(gen_domination(p, 1), InvalidParams);
    p = {};
    p.center_denom = 0;
    CHECK_THROWS_AS(gen_domination(p, 1), InvalidParams);
    p = {};
    p.center_denom = 100000;
    CHECK_THROWS_AS(gen_domination(p, 1), InvalidParams);
    p = {};
    p.kind = ShapeKind::Custom;  // no custom shape supplied
    CHECK_THROWS_AS(gen_domination(p, 1), InvalidParams);
}

TEST_CASE("gen_cover produces valid pseudodisk families with covered points") {
    CoverGenParams params;
    params.n_objects = 6;
    params.n_points = 12;
    params.extent = 4;

    GenStats stats;
    const CoverInstance inst = gen_cover(params, 99, &stats);
    CHECK(inst.objects.size() == 6);
    CHECK(inst.points.size() == 12);
    CHECK(verify_pseudodisk_family(inst.objects).empty());
    for (const Point& p : inst.points) {
        bool covered = false;
        for (const ConvexPolygon& obj : inst.objects)
            if (contains_point(obj, p)) covered = true;
        CHECK(covered);
    }
    // homothets of one base never cross more than twice
    CHECK(stats.rejected_crossings == 0);
    CHECK(stats.object_draws >= 6);

    const CoverInstance again = gen_cover(params, 99);
    CHECK(instance_to_json(Instance{inst}).dump() == instance_to_json(Instance{again}).dump());
}

TEST_CASE("gen_cover with rectangles rejects 4-crossing pairs") {
    CoverGenParams params;
    params.kind = CoverObjectKind::Rectangles;
    params.n_objects = 8;
    params.n_points = 4;
    params.extent = 2;
    params.scale_min = 1;
    params.scale_max = 3;

    std::size_t total_rejections = 0;
    for (Seed seed = 1; seed <= 10; ++seed) {
        GenStats stats;
        const CoverInstance inst = gen_cover(params, seed, &stats);
        CHECK(verify_pseudodisk_family(inst.objects).empty());
        total_rejections += stats.rejected_crossings + stats.rejected_overlap;
    }
    CHECK(total_rejections > 0);
}

TEST_CASE("gen_cover without points is valid") {
    CoverGenParams params;
    params.n_objects = 3;
    params.n_points = 0;
    const CoverInstance inst = gen_cover(params, 5);
    CHECK(inst.points.empty());
    CHECK(verify_pseudodisk_family(inst.objects).empty());
}

TEST_CASE("verify_pseudodisk_family finds offenders") {
    CHECK(verify_pseudodisk_family({box(0, 0, 2, 2), box(1, 1, 3, 3)}).empty());
    CHECK(verify_pseudodisk_family({box(0, 0, 2, 2)}).empty());

    const auto crossing = verify_pseudodisk_family({box(0, 1, 3, 2), box(1, 0, 2, 3)});
    REQUIRE(crossing.size() == 1);
    CHECK(crossing[0].i == 0);
    CHECK(crossing[0].j == 1);
    REQUIRE(crossing[0].crossings.has_value());
    CHECK(*crossing[0].crossings == 4);

    const auto shared = verify_pseudodisk_family({box(0, 0, 1, 1), box(1, 0, 2, 1)});
    REQUIRE(shared.size() == 1);
    CHECK_FALSE(shared[0].crossings.has_value());
}

TEST_CASE("instance JSON round-trips byte-exactly") {
    DominationGenParams dp;
    dp.n = 5;
    const Instance dom{gen_domination(dp, 42)};
    const std::string dom_bytes = instance_to_json(dom).dump();
    CHECK(instance_to_json(instance_from_json(instance_to_json(dom))).dump() == dom_bytes);

    CoverGenParams cp;
    cp.n_objects = 4;
    cp.n_points = 6;
    const Instance cov{gen_cover(cp, 43)};
    const std::string cov_bytes = instance_to_json(cov).dump();
    CHECK(instance_to_json(instance_from_json(instance_to_json(cov))).dump() == cov_bytes);

    const char* path = "tmp_test_instance.json";
    save_instance(dom, path);
    const Instance loaded = load_instance(path);
    CHECK(instance_to_json(loaded).dump() == dom_bytes);
    std::remove(path);
}

TEST_CASE("instance loading re-validates invariants") {
    DominationGenParams dp;
    dp.n = 2;
    Json dom = instance_to_json(Instance{gen_domination(dp, 1)});

    SUBCASE("zero scale") {
        dom["homothets"][0]["scale"] = "0";
        CHECK_THROWS_AS(instance_from_json(dom), InvariantViolation);
    }
    SUBCASE("empty homothets") {
        dom["homothets"] = Json::array();
        CHECK_THROWS_AS(instance_from_json(dom), InvariantViolation);
    }
    SUBCASE("center on the boundary") {
        dom["base"]["center"] = Json::array({"0", "0"});
        CHECK_THROWS_AS(instance_from_json(dom), InvariantViolation);
    }
    SUBCASE("bad version") {
        dom["version"] = 2;
        CHECK_THROWS_AS(instance_from_json(dom), ParseError);
    }
    SUBCASE("missing kind") {
        dom.erase("kind");
        CHECK_THROWS_AS(instance_from_json(dom), ParseError);
    }
    SUBCASE("malformed rational") {
        dom["homothets"][0]["scale"] = "1.5";
        CHECK_THROWS_AS(instance_from_json(dom), ParseError);
    }

    SUBCASE("cover family with 4 crossings") {
        Json cov = Json::object();
        cov["version"] = 1;
        cov["kind"] = "cover";
        cov["objects"] = Json::array({polygon_to_json(box(0, 1, 3, 2)),
                                      polygon_to_json(box(1, 0, 2, 3))});
        cov["points"] = Json::array();
        CHECK_THROWS_AS(instance_from_json(cov), InvariantViolation);
    }
    SUBCASE("uncovered point") {
        Json cov = Json::object();
        cov["version"] = 1;
        cov["kind"] = "cover";
        cov["objects"] = Json::array({polygon_to_json(box(0, 0, 1, 1))});
        cov["points"] = Json::array({Json::array({"5", "5"})});
        CHECK_THROWS_AS(instance_from_json(cov), InvariantViolation);
    }
}

TEST_CASE("instance_hash identifies geometry, not provenance") {
    DominationGenParams dp;
    dp.n = 4;
    DominationInstance a = gen_domination(dp, 77);
    DominationInstance b = a;
    b.seed = 12345;
    b.params.clear();
    CHECK(instance_hash(Instance{a}) == instance_hash(Instance{b}));
    CHECK(instance_hash(Instance{a}).size() == 16);

    const DominationInstance c = gen_domination(dp, 78);
    CHECK(instance_hash(Instance{a}) != instance_hash(Instance{c}));
}

TEST_CASE("point and polygon JSON keep exact rationals") {
    const Point p = ptq("-7/3", "22");
    CHECK(point_from_json(point_to_json(p)) == p);
    const ConvexPolygon poly = ConvexPolygon::from_vertices(
        {ptq("0", "0"), ptq("5/2", "-1/3"), ptq("2", "7/5")});
    CHECK(polygon_from_json(polygon_to_json(poly)) == poly);
    CHECK_THROWS_AS(point_from_json(Json::array({"1", "2", "3"})), ParseError);
    CHECK_THROWS_AS(point_from_json(Json::array({1, 2})), ParseError);
}
