#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "borsuk/diameter.hpp"
#include "borsuk/gallery.hpp"

using namespace borsuk;

namespace {

double brute_polygon_diameter(const ConvexPolygon& p) {
  double best = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      best = std::max(best, dist(p.vertex(i), p.vertex(j)));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("unit square diameter is the main diagonal") {
  ConvexBody sq(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  auto [d, w] = diameter(sq);
  CHECK(std::abs(d - std::sqrt(2.0)) < 1e-12);
  CHECK(dist(w.a, Point2{0, 0}) < 1e-12);
  CHECK(dist(w.b, Point2{1, 1}) < 1e-12);
}

TEST_CASE("disc diameter is twice the radius") {
  ConvexBody disc(Disc{{2, -1}, 3.0});
  auto [d, w] = diameter(disc);
  CHECK(std::abs(d - 6.0) < 1e-12);
  CHECK(std::abs(dist(w.a, w.b) - 6.0) < 1e-12);
}

TEST_CASE("reuleaux triangle diameter equals its width") {
  ConvexBody rt(reuleaux_polygon(3, 1.0));
  auto [d, w] = diameter(rt);
  CHECK(std::abs(d - 1.0) < 1e-9);
  CHECK(std::abs(dist(w.a, w.b) - d) < 1e-12);

  // brute force over boundary samples never exceeds it
  Boundary bd(rt);
  auto pts = bd.sample(512);
  double brute = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      brute = std::max(brute, dist(pts[i], pts[j]));
    }
  }
  CHECK(brute <= d + 1e-12);
  CHECK(brute > d - 1e-4);
}

TEST_CASE("caliper diameter matches brute force on random polygons") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> nd(3, 64);
  for (int trial = 0; trial < 500; ++trial) {
    auto poly = random_convex_polygon(nd(rng), rng());
    double d = diameter(ConvexBody(poly)).first;
    CHECK(std::abs(d - brute_polygon_diameter(poly)) < 1e-12);
  }
}

TEST_CASE("diameter pairs on the pentagon: five chords, nothing else") {
  auto pent = example_pentagon(4.0);
  auto pairs = diameter_pairs(ConvexBody(pent));
  CHECK(std::abs(pairs.diameter - 4.0) < 1e-9);
  CHECK(pairs.chords.size() == 5);
  CHECK(pairs.families.empty());
  for (const auto& ch : pairs.chords) {
    CHECK(std::abs(dist(ch.a, ch.b) - pairs.diameter) < 1e-8);
  }
}

TEST_CASE("diameter pairs on the disc: one full-circle family") {
  auto pairs = diameter_pairs(ConvexBody(Disc{{0, 0}, 1.5}));
  CHECK(std::abs(pairs.diameter - 3.0) < 1e-12);
  CHECK(pairs.chords.empty());
  REQUIRE(!pairs.families.empty());
  for (const auto& f : pairs.families) {
    CHECK(f.kind == DiameterFamily::Kind::ArcArc);
    CHECK(std::abs(2.0 * f.radius - pairs.diameter) < 1e-9);
  }
}

TEST_CASE("diameter pairs on the reuleaux triangle: three vertex-arc families") {
  auto pairs = diameter_pairs(ConvexBody(reuleaux_polygon(3, 1.0)));
  CHECK(std::abs(pairs.diameter - 1.0) < 1e-9);
  CHECK(pairs.chords.empty());  // corner-corner chords are subsumed by the families
  CHECK(pairs.families.size() == 3);
  for (const auto& f : pairs.families) {
    CHECK(f.kind == DiameterFamily::Kind::VertexArc);
    CHECK(std::abs(f.radius - 1.0) < 1e-9);
  }
}

TEST_CASE("pentagon graph is a five-cycle on isolated points") {
  auto g = build_diameter_graph(ConvexBody(example_pentagon(4.0)), kEpsDiameterRel);
  REQUIRE(g.classes.size() == 5);
  for (const auto& c : g.classes) CHECK(c.kind == VertexClass::Kind::IsolatedPoint);
  CHECK(g.edges.size() == 5);
  std::vector<int> deg(5, 0);
  for (const auto& e : g.edges) {
    CHECK(e.u != e.v);
    ++deg[static_cast<size_t>(e.u)];
    ++deg[static_cast<size_t>(e.v)];
  }
  for (int d : deg) CHECK(d == 2);
  CHECK(!g.classes_cover_boundary);
  auto cyc = find_odd_cycle(g);
  REQUIRE(cyc.has_value());
  CHECK(cyc->size() == 5);
}

TEST_CASE("reuleaux triangle graph alternates points and arcs") {
  auto g = build_diameter_graph(ConvexBody(reuleaux_polygon(3, 1.0)), kEpsDiameterRel);
  REQUIRE(g.classes.size() == 6);
  int arcs = 0, points = 0;
  for (const auto& c : g.classes) (c.is_arc() ? arcs : points)++;
  CHECK(arcs == 3);
  CHECK(points == 3);
  // walking around the boundary they alternate
  for (size_t i = 0; i < 6; ++i) {
    CHECK(g.classes[i].is_arc() != g.classes[(i + 1) % 6].is_arc());
  }
  CHECK(g.edges.size() == 3);
  for (const auto& e : g.edges) {
    CHECK(g.classes[static_cast<size_t>(e.u)].is_arc() !=
          g.classes[static_cast<size_t>(e.v)].is_arc());
  }
  CHECK(g.classes_cover_boundary);
}

TEST_CASE("disc graph is one closed class related to itself") {
  auto g = build_diameter_graph(ConvexBody(Disc{{0, 0}, 1.0}), kEpsDiameterRel);
  REQUIRE(g.classes.size() == 1);
  CHECK(g.classes[0].is_arc());
  CHECK(g.classes[0].range.full);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].u == 0);
  CHECK(g.edges[0].v == 0);
  CHECK(g.classes_cover_boundary);
}

TEST_CASE("square graph: two diagonals, no separation across them") {
  ConvexBody sq(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  auto g = build_diameter_graph(sq, kEpsDiameterRel);
  REQUIRE(g.classes.size() == 4);
  CHECK(g.edges.size() == 2);
  auto coloring = is_bipartite_with_separation(g);
  REQUIRE(coloring.has_value());
  // the two diagonals split as {v0,v1} vs {v2,v3} (or a rotation thereof):
  // each edge must join the two color groups
  for (const auto& e : g.edges) {
    CHECK(coloring->colors[static_cast<size_t>(e.u)] !=
          coloring->colors[static_cast<size_t>(e.v)]);
  }
}

TEST_CASE("regular hexagon splits into two arcs of three vertices") {
  auto hexbody = ConvexBody(regular_polygon(6, 1.0));
  auto g = build_diameter_graph(hexbody, kEpsDiameterRel);
  REQUIRE(g.classes.size() == 6);
  CHECK(g.edges.size() == 3);
  auto coloring = is_bipartite_with_separation(g);
  REQUIRE(coloring.has_value());
  // consecutive runs of three: vertices {0,1,2} one color, {3,4,5} the other
  CHECK(coloring->colors[0] == coloring->colors[1]);
  CHECK(coloring->colors[1] == coloring->colors[2]);
  CHECK(coloring->colors[3] == coloring->colors[4]);
  CHECK(coloring->colors[4] == coloring->colors[5]);
  CHECK(coloring->colors[0] != coloring->colors[3]);
}

TEST_CASE("odd regular polygons admit no separated two-coloring") {
  for (int n : {3, 5, 7, 9}) {
    auto g = build_diameter_graph(ConvexBody(regular_polygon(n, 1.0)), kEpsDiameterRel);
    CHECK(!is_bipartite_with_separation(g).has_value());
    auto cyc = find_odd_cycle(g);
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() % 2 == 1);
    CHECK(cyc->size() >= 3);
  }
}

TEST_CASE("reuleaux polygons admit no separated two-coloring") {
  for (int n : {3, 5, 7}) {
    auto g = build_diameter_graph(ConvexBody(reuleaux_polygon(n, 1.0)), kEpsDiameterRel);
    CHECK(!is_bipartite_with_separation(g).has_value());
    CHECK(g.classes_cover_boundary);
  }
}

TEST_CASE("no realized pair ever exceeds the reported diameter") {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<int> nd(3, 40);
  for (int trial = 0; trial < 200; ++trial) {
    auto poly = random_convex_polygon(nd(rng), rng());
    auto pairs = diameter_pairs(ConvexBody(poly));
    for (const auto& ch : pairs.chords) {
      CHECK(dist(ch.a, ch.b) <= pairs.diameter * (1.0 + 1e-12));
      CHECK(dist(ch.a, ch.b) >= pairs.diameter * (1.0 - kEpsDiameterRel) - 1e-15);
    }
  }
}

TEST_CASE("symmetric bodies: diameters through center, degree one, bipartite") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> nd(2, 16);
  for (int trial = 0; trial < 100; ++trial) {
    auto poly = random_symmetric_polygon(2 * nd(rng), rng());
    ConvexBody body(poly);
    auto ctr = symmetry_center(body);
    REQUIRE(ctr.has_value());
    auto pairs = diameter_pairs(body);
    for (const auto& ch : pairs.chords) {
      Point2 mid = 0.5 * (ch.a + ch.b);
      CHECK(dist(mid, *ctr) < kEpsSymmetry * pairs.diameter * 10.0);
    }
    auto g = build_diameter_graph(body, kEpsDiameterRel);
    std::vector<int> deg(g.classes.size(), 0);
    for (const auto& e : g.edges) {
      CHECK(e.u != e.v);
      ++deg[static_cast<size_t>(e.u)];
      ++deg[static_cast<size_t>(e.v)];
    }
    for (int d : deg) CHECK(d == 1);  // each class pairs with its antipode only
    CHECK(!find_odd_cycle(g).has_value());
  }
}

TEST_CASE("graph classes are ordered and pairwise disjoint") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> nd(3, 24);
  for (int trial = 0; trial < 100; ++trial) {
    auto poly = random_convex_polygon(nd(rng), rng());
    auto g = build_diameter_graph(ConvexBody(poly), kEpsDiameterRel);
    REQUIRE(!g.classes.empty());
    for (size_t i = 0; i + 1 < g.classes.size(); ++i) {
      CHECK(g.classes[i].order_key() < g.classes[i + 1].order_key() + 1e-15);
    }
    CHECK(g.diameter > 0.0);
    CHECK(std::abs(dist(g.witness.a, g.witness.b) - g.diameter) < 1e-9 * g.diameter);
  }
}

TEST_CASE("eps_rel outside the supported range is rejected") {
  ConvexBody sq(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK_THROWS_AS(diameter_pairs(sq, -1.0), Error);
  CHECK_THROWS_AS(diameter_pairs(sq, 1e-2), Error);
  CHECK_NOTHROW(diameter_pairs(sq, 1e-3));
}
