#include <algorithm>
#include <random>

#include "borsuk/geometry.hpp"
#include "doctest.h"

using namespace borsuk;

namespace {

ConvexBody unit_square() {
  return ConvexBody(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

ConvexBody left_half_disc() {
  // x <= 0 half of the unit disc: arc (0,1) -> (-1,0) -> (0,-1), then the
  // vertical chord back up.
  return ConvexBody(ArcGon({0, 1}, {ArcGonElement::arc({0, 0}, 1.0, {0, -1}),
                                    ArcGonElement::segment({0, 1})}));
}

bool near(Point2 a, Point2 b, double eps = 1e-12) { return dist(a, b) <= eps; }

double circular_gap(double s, double t) {
  double d = std::abs(s - t);
  return std::min(d, 1.0 - d);
}

ConvexBody random_hull(std::mt19937_64& rng, int npts) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    std::vector<Point2> pts;
    for (int i = 0; i < npts; ++i) pts.push_back({u(rng), u(rng)});
    try {
      return ConvexBody(hull_polygon(pts));
    } catch (const Error&) {
      // collinear draw; retry
    }
  }
}

}  // namespace

TEST_CASE("hull keeps extreme points only") {
  auto sq = hull_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
  CHECK(sq.size() == 4);
  CHECK(sq.contains({0.5, 0.5}, 0.0));
  CHECK(sq.area() == doctest::Approx(1.0));

  auto tri = hull_polygon({{0, 0}, {2, 0}, {1, 1}, {1, 0}});
  CHECK(tri.size() == 3);
  CHECK(tri.area() == doctest::Approx(1.0));

  CHECK_THROWS_AS(hull_polygon({{0, 0}, {1, 1}, {2, 2}}), Error);
}

TEST_CASE("support point uses face midpoints on ties") {
  ConvexBody sq = unit_square();
  CHECK(near(support_point(sq, {1, 0}), {1, 0.5}));
  CHECK(near(support_point(sq, dir(kPi / 4)), {1, 1}));
  ConvexBody disc{Disc{{0, 0}, 2.0}};
  CHECK(near(support_point(disc, {0, 1}), {0, 2}));
}

TEST_CASE("support point dominates boundary samples") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const ConvexBody& body :
       {unit_square(), ConvexBody{Disc{{2, -1}, 1.5}}, left_half_disc()}) {
    Boundary bd(body);
    auto samples = bd.sample(100);
    double scale = body_scale(body);
    for (int k = 0; k < 64; ++k) {
      Point2 dirn = dir(u(rng) * kTwoPi);
      Point2 s = support_point(body, dirn);
      for (Point2 p : samples) {
        CHECK(dirn.dot(s) >= dirn.dot(p) - 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("halfplane clip keeps the requested side") {
  ConvexBody sq = unit_square();
  ConvexBody cut = clip_halfplane(sq, HalfPlane::through({0, 0.5}, {0, 1}));
  REQUIRE(cut.is_polygon());
  CHECK(cut.polygon().size() == 4);
  CHECK(body_area(cut) == doctest::Approx(0.5));
  for (Point2 v : cut.polygon().vertices()) {
    CHECK(v.y <= 0.5 + 1e-12);
  }
}

TEST_CASE("clipping a disc through its center leaves one segment and one arc") {
  ConvexBody disc{Disc{{0, 0}, 1.0}};
  ConvexBody half = clip_halfplane(disc, HalfPlane::through({0, 0}, {1, 0}));
  REQUIRE(half.is_arcgon());
  const auto& elems = half.arcgon().elements();
  REQUIRE(elems.size() == 2);
  int arcs = 0, segs = 0;
  for (const auto& e : elems) (e.kind == ArcGonElement::Kind::Arc ? arcs : segs)++;
  CHECK(arcs == 1);
  CHECK(segs == 1);
  CHECK(body_area(half) == doctest::Approx(kPi / 2).epsilon(1e-9));
  CHECK(body_perimeter(half) == doctest::Approx(kPi + 2).epsilon(1e-9));
}

TEST_CASE("a cut that misses the body is a no-op, a swallowing cut is empty") {
  ConvexBody sq = unit_square();
  ConvexBody same = clip_halfplane(sq, HalfPlane::through({0, 2}, {0, 1}));
  REQUIRE(same.is_polygon());
  CHECK(body_area(same) == doctest::Approx(1.0));
  CHECK(!try_clip_halfplane(sq, HalfPlane::through({0, -1}, {0, 1})).has_value());
  CHECK_THROWS_AS(clip_halfplane(sq, HalfPlane::through({0, -1}, {0, 1})), Error);
}

TEST_CASE("clip output stays convex and inside on random polygon line pairs") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int iter = 0; iter < 1000; ++iter) {
    ConvexBody body = random_hull(rng, 4 + static_cast<int>(u(rng) * 9));
    // random line through a random interior chord of the bounding box
    Point2 lo, hi;
    body_bbox(body, lo, hi);
    Point2 through{lo.x + u(rng) * (hi.x - lo.x), lo.y + u(rng) * (hi.y - lo.y)};
    Point2 normal = dir(u(rng) * kTwoPi);
    auto cut = try_clip_halfplane(body, HalfPlane::through(through, normal));
    if (!cut) continue;
    // polygon constructor enforces strict convexity; membership shows the
    // result never escapes the original body
    REQUIRE(cut->is_polygon());
    CHECK(body_area(*cut) <= body_area(body) + 1e-12);
    for (Point2 v : cut->polygon().vertices()) {
      CHECK(body_contains(body, v, 1e-9));
    }
  }
}

TEST_CASE("clipping curved bodies stays convex and inside") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ConvexBody disc{Disc{{0.25, -0.5}, 1.25}};
  for (int iter = 0; iter < 200; ++iter) {
    Point2 through{0.25 + 2.4 * (u(rng) - 0.5), -0.5 + 2.4 * (u(rng) - 0.5)};
    Point2 normal = dir(u(rng) * kTwoPi);
    auto cut = try_clip_halfplane(disc, HalfPlane::through(through, normal));
    if (!cut) continue;
    Boundary bd(*cut);
    for (Point2 p : bd.sample(64)) {
      CHECK(body_contains(disc, p, 1e-9));
    }
    auto second = try_clip_halfplane(*cut, HalfPlane::through({0.25, -0.5}, dir(u(rng) * kTwoPi)));
    if (second) {
      CHECK(body_area(*second) <= body_area(*cut) + 1e-12);
    }
  }
}

TEST_CASE("symmetry centers") {
  auto sq = symmetry_center(unit_square());
  REQUIRE(sq.has_value());
  CHECK(near(*sq, {0.5, 0.5}));

  ConvexBody tri{ConvexPolygon({{0, 0}, {1, 0}, {0.5, 0.8}})};
  CHECK(!symmetry_center(tri).has_value());

  auto dc = symmetry_center(ConvexBody{Disc{{3, 4}, 2.0}});
  REQUIRE(dc.has_value());
  CHECK(near(*dc, {3, 4}));

  CHECK(!symmetry_center(left_half_disc()).has_value());
}

TEST_CASE("symmetry center reflects the body onto itself") {
  ConvexBody hexagon{ConvexPolygon(
      {{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}})};
  auto c = symmetry_center(hexagon);
  REQUIRE(c.has_value());
  ConvexBody mirrored = reflect_body(hexagon, *c);
  auto cm = symmetry_center(mirrored);
  REQUIRE(cm.has_value());
  CHECK(near(*cm, *c));
  const auto& a = hexagon.polygon().vertices();
  const auto& b = mirrored.polygon().vertices();
  for (Point2 va : a) {
    bool found = false;
    for (Point2 vb : b) found = found || near(va, vb, 1e-12);
    CHECK(found);
  }
}

TEST_CASE("boundary parametrization anchors and measures arc length") {
  ConvexBody sq = unit_square();
  CHECK(near(boundary_point_at(sq, 0.0), {0, 0}));
  CHECK(near(boundary_point_at(sq, 0.125), {0.5, 0}));
  ConvexBody disc{Disc{{0, 0}, 1.0}};
  CHECK(near(boundary_point_at(disc, 0.25), {0, 1}, 1e-12));
}

TEST_CASE("boundary param round trip") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const ConvexBody& body :
       {unit_square(), ConvexBody{Disc{{-2, 1}, 3.0}}, left_half_disc()}) {
    for (int i = 0; i < 256; ++i) {
      double t = u(rng);
      Point2 p = boundary_point_at(body, t);
      double back = boundary_param_of(body, p);
      CHECK(circular_gap(back, t) <= 1e-9);
    }
  }
}

TEST_CASE("containment and measures") {
  ConvexBody half = left_half_disc();
  CHECK(body_contains(half, {-0.5, 0}, 0.0));
  CHECK(!body_contains(half, {0.5, 0}, 1e-9));
  CHECK(!body_contains(half, {-0.9, 0.9}, 1e-9));
  CHECK(body_area(half) == doctest::Approx(kPi / 2).epsilon(1e-12));
  ConvexBody disc{Disc{{0, 0}, 2.0}};
  CHECK(body_area(disc) == doctest::Approx(4 * kPi));
  CHECK(body_perimeter(disc) == doctest::Approx(4 * kPi));
}

TEST_CASE("arcgon construction rejects malformed boundaries") {
  // arc sweeping three quarter turns
  CHECK_THROWS_AS(ArcGon({1, 0}, {ArcGonElement::arc({0, 0}, 1.0, {0, -1}),
                                  ArcGonElement::segment({1, 0})}),
                  Error);
  // boundary that does not close
  CHECK_THROWS_AS(ArcGon({0, 0}, {ArcGonElement::segment({1, 0}),
                                  ArcGonElement::segment({1, 1})}),
                  Error);
  // arc endpoint off its own circle
  CHECK_THROWS_AS(ArcGon({1, 0}, {ArcGonElement::arc({0, 0}, 2.0, {0, 1}),
                                  ArcGonElement::segment({1, 0})}),
                  Error);
}

TEST_CASE("similarity transforms scale measures correctly") {
  ConvexBody sq = unit_square();
  ConvexBody moved = transform_body(sq, kPi / 6, 2.5, {3, -4});
  CHECK(body_area(moved) == doctest::Approx(2.5 * 2.5));
  CHECK(body_perimeter(moved) == doctest::Approx(4 * 2.5));
  ConvexBody half = left_half_disc();
  ConvexBody moved2 = transform_body(half, 1.0, 0.5, {1, 1});
  CHECK(body_area(moved2) == doctest::Approx(kPi / 8).epsilon(1e-9));
}
