#include "borsuk/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace borsuk {

ConvexPolygon regular_polygon(int n, double circumradius) {
  if (n < 3 || !(circumradius > 0.0) || !std::isfinite(circumradius)) {
    throw Error(ErrorKind::DegenerateInput, "regular polygon needs n >= 3 and radius > 0");
  }
  std::vector<Point2> v;
  v.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    v.push_back(circumradius * dir(kTwoPi * k / n));
  }
  return ConvexPolygon(std::move(v));
}

ArcGon reuleaux_polygon(int n, double width) {
  if (n < 3 || n % 2 == 0) {
    throw Error(ErrorKind::DegenerateInput, "constant-width polygon needs odd n >= 3");
  }
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw Error(ErrorKind::DegenerateInput, "width must be positive");
  }
  // regular n-gon whose long diagonal (vertex to either endpoint of the
  // opposite side) equals the width
  double R = width / (2.0 * std::cos(kPi / (2.0 * n)));
  std::vector<Point2> v;
  for (int k = 0; k < n; ++k) v.push_back(R * dir(kTwoPi * k / n));
  std::vector<ArcGonElement> elems;
  for (int k = 0; k < n; ++k) {
    Point2 center = v[static_cast<size_t>((k + (n + 1) / 2) % n)];
    Point2 to = v[static_cast<size_t>((k + 1) % n)];
    elems.push_back(ArcGonElement::arc(center, width, to));
  }
  return ArcGon(v[0], std::move(elems));
}

ConvexPolygon example_pentagon(double r, double beta, double gamma) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorKind::InvalidParameters, "pentagon radius must be positive");
  }
  if (!(beta > 1e-9) || !(beta < 1.0 - 1e-9) || !(gamma > 1e-9) || !(gamma < 1.0 - 1e-9)) {
    throw Error(ErrorKind::InvalidParameters, "beta and gamma must lie strictly inside (0,1)");
  }
  Point2 o{0, 0};
  Point2 a{r, 0};
  // b runs along the lens arc of the circle about a, from o (beta=0) to the
  // upper lens tip (beta=1); c along the circle about o, from a (gamma=0)
  // to the same tip (gamma=1).
  double phi_b = kPi - (kPi / 3.0) * beta;
  double psi_c = (kPi / 3.0) * gamma;
  Point2 b = a + r * dir(phi_b);
  Point2 c = r * dir(psi_c);

  // d: intersection of the radius-r circles about b and c, lower branch
  double span = dist(b, c);
  if (span >= 2.0 * r - 1e-12 * r || span <= 1e-12 * r) {
    throw Error(ErrorKind::InvalidParameters, "b and c leave no valid intersection for d");
  }
  Point2 mid = 0.5 * (b + c);
  double h = std::sqrt(std::max(0.0, r * r - 0.25 * span * span));
  Point2 unit = (c - b) * (1.0 / span);
  Point2 d1 = mid + h * unit.perp();
  Point2 d2 = mid - h * unit.perp();
  Point2 d = (d1.y < d2.y) ? d1 : d2;  // the branch below the lens axis
  double tol = 1e-9 * r;
  if (dist(d, o) > r - tol || dist(d, a) > r - tol) {
    throw Error(ErrorKind::InvalidParameters, "d falls outside the lens");
  }

  ConvexPolygon hull = hull_polygon({o, a, b, c, d});
  if (hull.size() != 5) {
    throw Error(ErrorKind::InvalidParameters, "pentagon construction degenerated");
  }
  // the five long chords must realize r exactly; all other pairs strictly less
  const Point2 pts[5] = {o, a, b, c, d};
  const int long_pairs[5][2] = {{0, 1}, {1, 2}, {2, 4}, {3, 4}, {0, 3}};
  for (auto [i, j] : long_pairs) {
    if (std::abs(dist(pts[i], pts[j]) - r) > tol) {
      throw Error(ErrorKind::InvalidParameters, "constructed chord misses the target length");
    }
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      bool is_long = false;
      for (auto [u, w] : long_pairs) is_long = is_long || (u == i && w == j);
      if (!is_long && dist(pts[i], pts[j]) >= r - tol) {
        throw Error(ErrorKind::InvalidParameters, "a short vertex pair reaches the diameter");
      }
    }
  }
  return hull;
}

namespace {

ConvexPolygon polygon_from_edge_vectors(std::vector<Point2> edges) {
  std::sort(edges.begin(), edges.end(), [](Point2 a, Point2 b) {
    return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
  });
  std::vector<Point2> v;
  Point2 cur{0, 0};
  for (Point2 e : edges) {
    v.push_back(cur);
    cur = cur + e;
  }
  return ConvexPolygon(std::move(v));
}

}  // namespace

ConvexPolygon random_convex_polygon(int n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorKind::DegenerateInput, "polygon needs n >= 3");
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed + 1000003ULL * attempt);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Point2> edges;
    edges.reserve(static_cast<size_t>(n));
    Point2 sum{0, 0};
    for (int i = 0; i < n; ++i) {
      Point2 e{u(rng), u(rng)};
      edges.push_back(e);
      sum = sum + e;
    }
    for (Point2& e : edges) e = e - sum * (1.0 / n);  // close the loop
    try {
      return polygon_from_edge_vectors(std::move(edges));
    } catch (const Error&) {
      // a degenerate draw (zero or parallel edge vectors); redraw
    }
  }
}

ConvexPolygon random_symmetric_polygon(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorKind::DegenerateInput, "symmetric polygon needs even n >= 4");
  }
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed + 1000003ULL * attempt);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Point2> edges;
    for (int i = 0; i < n / 2; ++i) {
      Point2 e{u(rng), u(rng)};
      if (e.y < 0 || (e.y == 0 && e.x < 0)) e = -e;  // keep generators in the upper half
      edges.push_back(e);
    }
    std::vector<Point2> all = edges;
    for (Point2 e : edges) all.push_back(-e);
    try {
      return polygon_from_edge_vectors(std::move(all));
    } catch (const Error&) {
      // parallel generators; redraw
    }
  }
}

std::vector<GalleryShape> standard_gallery() {
  std::vector<GalleryShape> out;
  out.push_back({"square",
                 {{"side", 1.0}},
                 ConvexBody(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})),
                 2});
  out.push_back({"disc", {{"radius", 1.0}}, ConvexBody(Disc{{0, 0}, 1.0}), 3});
  for (int n = 3; n <= 10; ++n) {
    out.push_back({"regular_" + std::to_string(n),
                   {{"n", static_cast<double>(n)}, {"circumradius", 1.0}},
                   ConvexBody(regular_polygon(n, 1.0)),
                   n % 2 == 1 ? 3 : 2});
  }
  for (int n : {3, 5, 7}) {
    out.push_back({"reuleaux_" + std::to_string(n),
                   {{"n", static_cast<double>(n)}, {"width", 1.0}},
                   ConvexBody(reuleaux_polygon(n, 1.0)),
                   3});
  }
  out.push_back({"example_pentagon",
                 {{"r", 4.0}, {"beta", 1.0 / 3.0}, {"gamma", 2.0 / 3.0}},
                 ConvexBody(example_pentagon(4.0)),
                 3});
  return out;
}

}  // namespace borsuk
