#include "borsuk/partition.hpp"

#include <algorithm>
#include <cmath>

#include "borsuk/diameter.hpp"

namespace borsuk {

std::array<Point2, 6> RegularHexagon::vertex_ring() const {
  std::array<Point2, 6> ring;
  double r = width / std::sqrt(3.0);
  for (int k = 0; k < 6; ++k) {
    ring[static_cast<size_t>(k)] = center + r * dir(orientation + kPi / 6.0 + k * kPi / 3.0);
  }
  return ring;
}

ConvexPolygon RegularHexagon::polygon() const {
  auto ring = vertex_ring();
  return ConvexPolygon(std::vector<Point2>(ring.begin(), ring.end()));
}

Partition two_partition(const ConvexBody& body, const Chord& chord) {
  double d = chord.length();
  if (!(d > 0.0)) throw Error(ErrorKind::InvalidCut, "zero-length cut chord");
  double big_d = diameter(body).first;
  Point2 n = ((chord.b - chord.a) * (1.0 / d)).perp();

  Partition part{body};
  part.tag = PartitionTag::ChordCut;
  for (HalfPlane hp : {HalfPlane::through(chord.a, n), HalfPlane::through(chord.a, -n)}) {
    auto piece = try_clip_halfplane(body, hp);
    if (!piece) throw Error(ErrorKind::InvalidCut, "cut chord misses the body interior");
    double piece_d = diameter(*piece).first;
    if (piece_d >= big_d * (1.0 - kEpsDiameterRel)) {
      throw Error(ErrorKind::InvalidCut, "a piece still attains the parent diameter");
    }
    part.pieces.push_back(std::move(*piece));
    part.piece_cuts.push_back({hp});
    part.piece_diameters.push_back(piece_d);
  }
  return part;
}

namespace {

struct StripHexagon {
  std::array<Point2, 6> w;        // vertices, w[j] between side j and side j+1
  std::array<double, 6> side;     // side j runs from w[j-1] to w[j]
  double spread;                  // max side - min side
};

// Intersection of the three supporting strips at theta + k*pi/3, each
// symmetrically widened to width big_d.
StripHexagon strip_hexagon(const ConvexBody& body, double theta, double big_d) {
  std::array<Point2, 6> normal;
  std::array<double, 6> offset;
  for (int k = 0; k < 3; ++k) {
    Point2 n = dir(theta + k * kPi / 3.0);
    double hi = support_value(body, n);
    double lo = -support_value(body, -n);
    double mid = 0.5 * (hi + lo);
    normal[static_cast<size_t>(k)] = n;
    offset[static_cast<size_t>(k)] = mid + 0.5 * big_d;
    normal[static_cast<size_t>(k + 3)] = -n;
    offset[static_cast<size_t>(k + 3)] = 0.5 * big_d - mid;
  }
  StripHexagon hex{};
  for (int j = 0; j < 6; ++j) {
    Point2 n1 = normal[static_cast<size_t>(j)];
    Point2 n2 = normal[static_cast<size_t>((j + 1) % 6)];
    double o1 = offset[static_cast<size_t>(j)];
    double o2 = offset[static_cast<size_t>((j + 1) % 6)];
    double det = n1.x * n2.y - n1.y * n2.x;  // sin(pi/3), never small
    hex.w[static_cast<size_t>(j)] = {(o1 * n2.y - o2 * n1.y) / det,
                                     (n1.x * o2 - n2.x * o1) / det};
  }
  for (int j = 0; j < 6; ++j) {
    hex.side[static_cast<size_t>(j)] =
        dist(hex.w[static_cast<size_t>((j + 5) % 6)], hex.w[static_cast<size_t>(j)]);
  }
  auto [lo_s, hi_s] = std::minmax_element(hex.side.begin(), hex.side.end());
  hex.spread = *hi_s - *lo_s;
  return hex;
}

}  // namespace

RegularHexagon pal_hexagon(const ConvexBody& body) {
  double big_d = diameter(body).first;
  auto g = [&](double theta) {
    StripHexagon h = strip_hexagon(body, theta, big_d);
    return h.side[0] - h.side[1];
  };

  const int kGrid = 720;
  double theta_star = 0.0;
  bool found = false;
  double prev = g(0.0);
  double best_abs = std::abs(prev);
  double prev_theta = 0.0;
  for (int i = 1; i <= kGrid && !found; ++i) {
    double theta = (kPi / 3.0) * i / kGrid;
    double cur = g(theta);
    if (std::abs(cur) < best_abs) {
      best_abs = std::abs(cur);
      theta_star = theta;
    }
    if ((prev <= 0.0 && cur >= 0.0) || (prev >= 0.0 && cur <= 0.0)) {
      // bisect the bracketing interval down to 1e-12
      double lo = prev_theta, hi = theta, glo = prev;
      while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if ((glo <= 0.0) == (gm <= 0.0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      theta_star = 0.5 * (lo + hi);
      found = true;
    }
    prev = cur;
    prev_theta = theta;
  }
  // no numeric sign change (flat g, e.g. constant-width bodies): take the
  // grid argmin and let the post-checks decide

  StripHexagon raw = strip_hexagon(body, theta_star, big_d);
  if (raw.spread > 1e-6 * big_d) {
    throw Error(ErrorKind::ConstructionFailed, "hexagon sides did not equalize");
  }
  Point2 center{0, 0};
  for (const Point2& p : raw.w) center = center + p;
  center = center * (1.0 / 6.0);

  RegularHexagon hex;
  hex.center = center;
  hex.width = big_d;
  hex.orientation = std::fmod(theta_star, kPi / 3.0);
  if (hex.orientation < 0.0) hex.orientation += kPi / 3.0;

  // independent containment audit against the idealized hexagon
  Boundary bd(body);
  std::vector<Point2> probes = bd.sample(4096);
  for (Point2 p : bd.corner_points()) probes.push_back(p);
  for (int k = 0; k < 6; ++k) {
    Point2 n = dir(hex.orientation + k * kPi / 3.0);
    HalfPlane side = {n, n.dot(center) + 0.5 * big_d};
    for (Point2 p : probes) {
      if (!side.contains(p, kEpsOnBoundary * big_d)) {
        throw Error(ErrorKind::ConstructionFailed, "hexagon fails to contain the body");
      }
    }
  }
  return hex;
}

std::array<ConvexPolygon, 3> hexagon_three_pieces(const RegularHexagon& hex) {
  if (!(hex.width > 0.0) || !std::isfinite(hex.width)) {
    throw Error(ErrorKind::DegenerateInput, "hexagon width must be positive");
  }
  auto v = hex.vertex_ring();
  std::array<Point2, 3> m = {0.5 * (v[0] + v[1]), 0.5 * (v[2] + v[3]), 0.5 * (v[4] + v[5])};
  Point2 c = hex.center;
  return {ConvexPolygon({c, m[0], v[1], v[2], m[1]}),
          ConvexPolygon({c, m[1], v[3], v[4], m[2]}),
          ConvexPolygon({c, m[2], v[5], v[0], m[0]})};
}

Partition three_partition(const ConvexBody& body) {
  RegularHexagon hex = pal_hexagon(body);
  auto v = hex.vertex_ring();
  std::array<Point2, 3> m = {0.5 * (v[0] + v[1]), 0.5 * (v[2] + v[3]), 0.5 * (v[4] + v[5])};
  Point2 c = hex.center;

  Partition part{body};
  part.tag = PartitionTag::PalHexagon;
  for (int k = 0; k < 3; ++k) {
    // the 120-degree wedge swept ccw from ray c->m[k] to ray c->m[k+1]
    Point2 da = (m[static_cast<size_t>(k)] - c).normalized();
    Point2 db = (m[static_cast<size_t>((k + 1) % 3)] - c).normalized();
    HalfPlane ha = HalfPlane::through(c, -da.perp());  // ccw side of ray a
    HalfPlane hb = HalfPlane::through(c, db.perp());   // cw side of ray b
    auto piece = try_clip_halfplane(body, ha);
    if (piece) piece = try_clip_halfplane(*piece, hb);
    if (!piece) continue;
    part.pieces.push_back(std::move(*piece));
    part.piece_cuts.push_back({ha, hb});
    part.piece_diameters.push_back(diameter(part.pieces.back()).first);
  }
  if (part.pieces.empty()) {
    throw Error(ErrorKind::ConstructionFailed, "hexagon wedges missed the body");
  }
  return part;
}

namespace {

double sampled_body_diameter(const ConvexBody& body, int samples) {
  Boundary bd(body);
  std::vector<Point2> pts = bd.sample(samples);
  for (Point2 p : bd.corner_points()) pts.push_back(p);
  try {
    return diameter(ConvexBody(hull_polygon(pts))).first;
  } catch (const Error&) {
    // needle-thin piece: the hull degenerates, fall back to a scan
    double best = 0.0;
    size_t stride = pts.size() > 1500 ? pts.size() / 1500 + 1 : 1;
    for (size_t i = 0; i < pts.size(); i += stride) {
      for (size_t j = i + stride; j < pts.size(); j += stride) {
        best = std::max(best, dist(pts[i], pts[j]));
      }
    }
    return best;
  }
}

// area of pieces[i] ∩ pieces[j], via the recorded cuts when available,
// else by clipping one piece with the other's edges
double overlap_area(const Partition& part, size_t i, size_t j) {
  const bool have_cuts = part.piece_cuts.size() == part.pieces.size() &&
                         !part.piece_cuts[i].empty() && !part.piece_cuts[j].empty();
  if (have_cuts) {
    std::optional<ConvexBody> region = part.parent;
    for (size_t k : {i, j}) {
      for (const HalfPlane& hp : part.piece_cuts[k]) {
        region = try_clip_halfplane(*region, hp);
        if (!region) return 0.0;
      }
    }
    return body_area(*region);
  }
  const ConvexBody* subject = &part.pieces[i];
  const ConvexBody* clipper = &part.pieces[j];
  if (!clipper->is_polygon()) std::swap(subject, clipper);
  if (!clipper->is_polygon()) return 0.0;  // no way to measure; report nothing
  const ConvexPolygon& poly = clipper->polygon();
  std::optional<ConvexBody> region = *subject;
  for (int e = 0; e < poly.size(); ++e) {
    Point2 a = poly.vertex(e), b = poly.vertex((e + 1) % poly.size());
    Point2 n = -((b - a).normalized().perp());  // outward normal of a ccw edge
    region = try_clip_halfplane(*region, HalfPlane::through(a, n));
    if (!region) return 0.0;
  }
  return body_area(*region);
}

}  // namespace

VerificationReport verify_partition(const ConvexBody& body, const Partition& partition,
                                    int samples) {
  if (samples < 100) {
    throw Error(ErrorKind::InvalidParameters, "verification needs at least 100 samples");
  }
  VerificationReport report;
  double big_d = diameter(body).first;
  double parent_area = body_area(body);

  double piece_area_sum = 0.0;
  for (const ConvexBody& piece : partition.pieces) {
    double est = sampled_body_diameter(piece, samples);
    report.piece_diameters.push_back(est);
    report.max_piece_diameter = std::max(report.max_piece_diameter, est);
    piece_area_sum += body_area(piece);

    // convexity probe: midpoints of consecutive boundary samples stay inside
    Boundary bd(piece);
    int probe_n = std::min(samples, 1024);
    std::vector<Point2> probe = bd.sample(probe_n);
    double eps = kEpsOnBoundary * body_scale(piece) * 10.0;
    for (size_t k = 0; k < probe.size(); ++k) {
      Point2 mid = 0.5 * (probe[k] + probe[(k + 1) % probe.size()]);
      if (!body_contains(piece, mid, eps)) {
        report.convex_ok = false;
        break;
      }
    }
  }
  report.margin = big_d - report.max_piece_diameter;
  report.area_deficit = std::abs(parent_area - piece_area_sum) / parent_area;

  for (size_t i = 0; i < partition.pieces.size(); ++i) {
    for (size_t j = i + 1; j < partition.pieces.size(); ++j) {
      report.max_overlap =
          std::max(report.max_overlap, overlap_area(partition, i, j) / parent_area);
    }
  }

  report.pass = report.margin > 0.0 && report.area_deficit <= kEpsAreaRel &&
                report.convex_ok && report.max_overlap <= 1e-9;
  return report;
}

}  // namespace borsuk
