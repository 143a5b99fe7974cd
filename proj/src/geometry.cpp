#include "borsuk/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace borsuk {

namespace {

// Angular interval helpers used by the clipping walk. Intervals are
// [lo, hi] with hi >= lo; positions on a circle compare mod 2*pi.

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

std::vector<Point2> sanitize_ring(std::vector<Point2> pts, double merge_eps) {
  // Drop consecutive duplicates (cyclically), then collinear/reflex
  // middles until stable. Used to clean polygon clip output.
  auto dedup = [&](std::vector<Point2>& v) {
    std::vector<Point2> out;
    for (Point2 p : v) {
      if (out.empty() || dist(out.back(), p) > merge_eps) out.push_back(p);
    }
    while (out.size() >= 2 && dist(out.front(), out.back()) <= merge_eps) out.pop_back();
    v = std::move(out);
  };
  dedup(pts);
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (size_t i = 0; i < pts.size(); ++i) {
      Point2 a = pts[(i + pts.size() - 1) % pts.size()];
      Point2 b = pts[i];
      Point2 c = pts[(i + 1) % pts.size()];
      double cr = cross(a, b, c);
      double span = dist(a, c);
      if (cr <= merge_eps * span) {  // straight or reflex middle point
        pts.erase(pts.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
    if (changed) dedup(pts);
  }
  return pts;
}

}  // namespace

// --- ConvexPolygon ---

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 3) throw Error(ErrorKind::DegenerateInput, "polygon needs >= 3 vertices");
  for (Point2 p : verts_) {
    if (!p.finite()) throw Error(ErrorKind::DegenerateInput, "polygon vertex not finite");
  }
  double twice_area = 0.0;
  int n = static_cast<int>(verts_.size());
  for (int i = 0; i < n; ++i) {
    twice_area += verts_[static_cast<size_t>(i)].cross(verts_[static_cast<size_t>((i + 1) % n)]);
  }
  if (twice_area < 0) std::reverse(verts_.begin(), verts_.end());
  if (twice_area == 0.0) throw Error(ErrorKind::DegenerateInput, "polygon has zero area");
  for (int i = 0; i < n; ++i) {
    Point2 a = verts_[static_cast<size_t>(i)];
    Point2 b = verts_[static_cast<size_t>((i + 1) % n)];
    Point2 c = verts_[static_cast<size_t>((i + 2) % n)];
    if (cross(a, b, c) <= 0.0) {
      throw Error(ErrorKind::DegenerateInput, "polygon not strictly convex");
    }
  }
}

double ConvexPolygon::area() const {
  double s = 0.0;
  int n = size();
  for (int i = 0; i < n; ++i) {
    s += verts_[static_cast<size_t>(i)].cross(verts_[static_cast<size_t>((i + 1) % n)]);
  }
  return 0.5 * s;
}

double ConvexPolygon::perimeter() const {
  double s = 0.0;
  int n = size();
  for (int i = 0; i < n; ++i) {
    s += dist(verts_[static_cast<size_t>(i)], verts_[static_cast<size_t>((i + 1) % n)]);
  }
  return s;
}

bool ConvexPolygon::contains(Point2 p, double eps) const {
  int n = size();
  for (int i = 0; i < n; ++i) {
    Point2 a = verts_[static_cast<size_t>(i)];
    Point2 b = verts_[static_cast<size_t>((i + 1) % n)];
    double len = dist(a, b);
    if ((b - a).cross(p - a) < -eps * std::max(len, 1.0)) return false;
  }
  return true;
}

// --- ArcGon ---

ArcGon::ArcGon(Point2 start, std::vector<ArcGonElement> elements)
    : start_(start), elements_(std::move(elements)) {
  if (elements_.size() < 2) {
    throw Error(ErrorKind::InvalidParameters, "arcgon needs >= 2 boundary elements");
  }
  if (!start_.finite()) throw Error(ErrorKind::DegenerateInput, "arcgon start not finite");

  double scale = 0.0;
  for (const auto& e : elements_) {
    if (!e.to.finite()) throw Error(ErrorKind::DegenerateInput, "arcgon point not finite");
    scale = std::max(scale, dist(start_, e.to));
    if (e.kind == ArcGonElement::Kind::Arc) {
      if (!e.center.finite() || !std::isfinite(e.radius)) {
        throw Error(ErrorKind::DegenerateInput, "arcgon arc not finite");
      }
      scale = std::max(scale, e.radius);
    }
  }
  if (scale <= 0.0) throw Error(ErrorKind::DegenerateInput, "arcgon has zero extent");
  double tol = 1e-9 * scale;

  Point2 prev = start_;
  double total_turn = 0.0;
  Point2 first_tangent;
  Point2 prev_tangent;
  bool have_prev_tangent = false;

  auto account_corner = [&](Point2 t_in, Point2 t_out) {
    total_turn += std::atan2(t_in.cross(t_out), t_in.dot(t_out));
    if (t_in.cross(t_out) < -1e-9) {
      throw Error(ErrorKind::InvalidParameters, "arcgon boundary turns clockwise at a corner");
    }
  };

  for (const auto& e : elements_) {
    Point2 t_start, t_end;
    if (e.kind == ArcGonElement::Kind::Segment) {
      double len = dist(prev, e.to);
      if (len <= tol) throw Error(ErrorKind::DegenerateInput, "arcgon segment has zero length");
      t_start = t_end = (e.to - prev).normalized();
    } else {
      if (e.radius <= tol) throw Error(ErrorKind::InvalidParameters, "arcgon arc radius too small");
      double ra = dist(prev, e.center);
      double rb = dist(e.to, e.center);
      if (std::abs(ra - e.radius) > 1e-6 * scale || std::abs(rb - e.radius) > 1e-6 * scale) {
        throw Error(ErrorKind::InvalidParameters, "arcgon arc endpoints not on its circle");
      }
      double ang_a = std::atan2(prev.y - e.center.y, prev.x - e.center.x);
      double ang_b = std::atan2(e.to.y - e.center.y, e.to.x - e.center.x);
      double sweep = wrap_angle(ang_b - ang_a);
      if (sweep <= tol / e.radius) {
        throw Error(ErrorKind::DegenerateInput, "arcgon arc has zero sweep");
      }
      if (sweep > kPi + 1e-9) {
        throw Error(ErrorKind::InvalidParameters, "arcgon arc sweeps more than a half turn");
      }
      t_start = dir(ang_a + kPi / 2.0);
      t_end = dir(ang_a + sweep + kPi / 2.0);
      total_turn += sweep;
    }
    if (have_prev_tangent) {
      account_corner(prev_tangent, t_start);
    } else {
      first_tangent = t_start;
    }
    prev_tangent = t_end;
    have_prev_tangent = true;
    prev = e.to;
  }
  if (dist(prev, start_) > tol) {
    throw Error(ErrorKind::InvalidParameters, "arcgon boundary does not close");
  }
  account_corner(prev_tangent, first_tangent);
  if (std::abs(total_turn - kTwoPi) > 1e-6) {
    throw Error(ErrorKind::InvalidParameters, "arcgon boundary is not a simple ccw loop");
  }
}

// --- ConvexBody ---

ConvexBody::ConvexBody(Disc d) : shape_(d) {
  if (!(d.radius > 0.0) || !std::isfinite(d.radius) || !d.center.finite()) {
    throw Error(ErrorKind::DegenerateInput, "disc needs a finite positive radius");
  }
}

// --- Boundary ---

Boundary::Boundary(const ConvexBody& body) {
  auto add_segment = [&](Point2 a, Point2 b) {
    BoundaryPiece p;
    p.is_arc = false;
    p.a = a;
    p.b = b;
    p.length = dist(a, b);
    pieces_.push_back(p);
  };
  auto add_arc = [&](Point2 center, double radius, double ang_a, double ang_b) {
    BoundaryPiece p;
    p.is_arc = true;
    p.center = center;
    p.radius = radius;
    p.ang_a = ang_a;
    p.ang_b = ang_b;
    p.a = center + radius * dir(ang_a);
    p.b = center + radius * dir(ang_b);
    p.length = radius * (ang_b - ang_a);
    pieces_.push_back(p);
  };

  switch (body.kind()) {
    case ConvexBody::Kind::Polygon: {
      const auto& v = body.polygon().vertices();
      int n = static_cast<int>(v.size());
      for (int i = 0; i < n; ++i) {
        add_segment(v[static_cast<size_t>(i)], v[static_cast<size_t>((i + 1) % n)]);
      }
      break;
    }
    case ConvexBody::Kind::Disc: {
      const Disc& d = body.disc();
      add_arc(d.center, d.radius, 0.0, kPi);
      add_arc(d.center, d.radius, kPi, kTwoPi);
      break;
    }
    case ConvexBody::Kind::ArcGon: {
      const ArcGon& g = body.arcgon();
      Point2 prev = g.start();
      for (const auto& e : g.elements()) {
        if (e.kind == ArcGonElement::Kind::Segment) {
          add_segment(prev, e.to);
        } else {
          double ang_a = std::atan2(prev.y - e.center.y, prev.x - e.center.x);
          double ang_b = std::atan2(e.to.y - e.center.y, e.to.x - e.center.x);
          double sweep = wrap_angle(ang_b - ang_a);
          add_arc(e.center, e.radius, ang_a, ang_a + sweep);
        }
        prev = e.to;
      }
      break;
    }
  }

  perimeter_ = 0.0;
  for (auto& p : pieces_) perimeter_ += p.length;
  double acc = 0.0;
  for (auto& p : pieces_) {
    p.t0 = acc / perimeter_;
    acc += p.length;
  }
}

Point2 Boundary::point_at(double t) const {
  t = wrap_unit(t);
  double s = t * perimeter_;
  double acc = 0.0;
  for (const auto& p : pieces_) {
    if (s <= acc + p.length || &p == &pieces_.back()) {
      double local = std::min(std::max(s - acc, 0.0), p.length);
      if (p.is_arc) {
        return p.center + p.radius * dir(p.ang_a + local / p.radius);
      }
      double f = p.length > 0 ? local / p.length : 0.0;
      return p.a + (p.b - p.a) * f;
    }
    acc += p.length;
  }
  return pieces_.back().b;
}

double Boundary::param_of(Point2 p, double eps_abs) const {
  double best_d = std::numeric_limits<double>::infinity();
  double best_t = 0.0;
  for (const auto& pc : pieces_) {
    double d, t_local;
    if (pc.is_arc) {
      Point2 rel = p - pc.center;
      double rho = rel.norm();
      double theta = std::atan2(rel.y, rel.x);
      double delta = wrap_angle(theta - pc.ang_a);
      if (rho > 0.0 && delta <= pc.sweep()) {
        d = std::abs(rho - pc.radius);
        t_local = delta * pc.radius / perimeter_;
      } else {
        double da = dist(p, pc.a), db = dist(p, pc.b);
        if (da <= db) {
          d = da;
          t_local = 0.0;
        } else {
          d = db;
          t_local = pc.length / perimeter_;
        }
      }
    } else {
      Point2 ab = pc.b - pc.a;
      double f = clamp01(ab.dot(p - pc.a) / ab.norm2());
      d = dist(p, pc.a + ab * f);
      t_local = f * pc.length / perimeter_;
    }
    if (d < best_d) {
      best_d = d;
      best_t = pc.t0 + t_local;
    }
  }
  if (best_d > eps_abs) {
    throw Error(ErrorKind::NotOnBoundary, "point is not on the body boundary");
  }
  return wrap_unit(best_t);
}

std::vector<Point2> Boundary::sample(int n, const std::vector<double>* jitter) const {
  std::vector<Point2> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double j = jitter ? (*jitter)[static_cast<size_t>(i)] : 0.0;
    out.push_back(point_at((static_cast<double>(i) + j) / static_cast<double>(n)));
  }
  return out;
}

std::vector<double> Boundary::sample_params(int n) const {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(static_cast<double>(i) / static_cast<double>(n));
  return out;
}

std::vector<Point2> Boundary::corner_points() const {
  std::vector<Point2> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) out.push_back(p.a);
  return out;
}

// --- hull ---

ConvexPolygon hull_polygon(const std::vector<Point2>& points) {
  std::vector<Point2> pts = points;
  for (Point2 p : pts) {
    if (!p.finite()) throw Error(ErrorKind::DegenerateInput, "hull input not finite");
  }
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  size_t n = pts.size();
  if (n < 3) throw Error(ErrorKind::DegenerateInput, "hull needs >= 3 distinct points");

  std::vector<Point2> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower hull
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {  // upper hull
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) throw Error(ErrorKind::DegenerateInput, "hull input is collinear");
  return ConvexPolygon(std::move(h));
}

// --- support ---

namespace {

// Extremal boundary candidates in a given direction: polygon vertices,
// arc/segment endpoints, and interior arc points where the outward normal
// aligns with the direction.
std::vector<Point2> support_candidates(const ConvexBody& body, Point2 d) {
  std::vector<Point2> cand;
  if (body.is_polygon()) {
    cand = body.polygon().vertices();
    return cand;
  }
  if (body.is_disc()) {
    const Disc& dc = body.disc();
    cand.push_back(dc.center + dc.radius * d.normalized());
    return cand;
  }
  Boundary b(body);
  for (const auto& p : b.pieces()) {
    cand.push_back(p.a);
    if (p.is_arc) {
      double psi = std::atan2(d.y, d.x);
      double delta = wrap_angle(psi - p.ang_a);
      if (delta <= p.sweep()) cand.push_back(p.point_at_angle(p.ang_a + delta));
    }
  }
  return cand;
}

}  // namespace

double support_value(const ConvexBody& body, Point2 direction) {
  double best = -std::numeric_limits<double>::infinity();
  for (Point2 p : support_candidates(body, direction)) best = std::max(best, direction.dot(p));
  return best;
}

Point2 support_point(const ConvexBody& body, Point2 direction) {
  if (direction.norm() == 0.0) {
    throw Error(ErrorKind::InvalidParameters, "support direction must be nonzero");
  }
  std::vector<Point2> cand = support_candidates(body, direction);
  double best = -std::numeric_limits<double>::infinity();
  for (Point2 p : cand) best = std::max(best, direction.dot(p));
  double tol = 1e-12 * std::max(1.0, body_scale(body)) * direction.norm();
  // A flat support face yields several extremal candidates; resolve to
  // the midpoint of the extreme pair so the answer is unique.
  Point2 lo{0, 0}, hi{0, 0};
  bool any = false;
  Point2 side = direction.perp();
  for (Point2 p : cand) {
    if (direction.dot(p) >= best - tol) {
      if (!any) {
        lo = hi = p;
        any = true;
      } else {
        if (side.dot(p) < side.dot(lo)) lo = p;
        if (side.dot(p) > side.dot(hi)) hi = p;
      }
    }
  }
  return 0.5 * (lo + hi);
}

// --- area / perimeter / containment / bbox ---

double body_area(const ConvexBody& body) {
  switch (body.kind()) {
    case ConvexBody::Kind::Polygon:
      return body.polygon().area();
    case ConvexBody::Kind::Disc:
      return body.disc().area();
    case ConvexBody::Kind::ArcGon: {
      Boundary b(body);
      double s = 0.0;
      for (const auto& p : b.pieces()) {
        s += 0.5 * p.a.cross(p.b);
        if (p.is_arc) {
          double sw = p.sweep();
          s += 0.5 * p.radius * p.radius * (sw - std::sin(sw));
        }
      }
      return s;
    }
  }
  return 0.0;
}

double body_perimeter(const ConvexBody& body) { return Boundary(body).perimeter(); }

bool body_contains(const ConvexBody& body, Point2 p, double eps_abs) {
  switch (body.kind()) {
    case ConvexBody::Kind::Polygon:
      return body.polygon().contains(p, eps_abs);
    case ConvexBody::Kind::Disc:
      return body.disc().contains(p, eps_abs);
    case ConvexBody::Kind::ArcGon: {
      Boundary b(body);
      const auto& pieces = b.pieces();
      // Inside iff left of every chord, except that points beyond an arc's
      // chord are inside when they are within that arc's circle.
      for (const auto& pc : pieces) {
        Point2 ab = pc.b - pc.a;
        double len = ab.norm();
        if (len <= 0.0) continue;
        double sd = ab.cross(p - pc.a) / len;  // >0 left of chord
        if (sd < -eps_abs) {
          if (pc.is_arc && dist(p, pc.center) <= pc.radius + eps_abs) continue;
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

void body_bbox(const ConvexBody& body, Point2& lo, Point2& hi) {
  lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  hi = {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  auto include = [&](Point2 p) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  };
  if (body.is_polygon()) {
    for (Point2 p : body.polygon().vertices()) include(p);
    return;
  }
  if (body.is_disc()) {
    const Disc& d = body.disc();
    include(d.center - Point2{d.radius, d.radius});
    include(d.center + Point2{d.radius, d.radius});
    return;
  }
  Boundary b(body);
  for (const auto& pc : b.pieces()) {
    include(pc.a);
    include(pc.b);
    if (pc.is_arc) {
      double step = kPi / 2.0;
      long k0 = static_cast<long>(std::ceil(pc.ang_a / step));
      long k1 = static_cast<long>(std::floor(pc.ang_b / step));
      for (long k = k0; k <= k1; ++k) {
        include(pc.center + pc.radius * dir(static_cast<double>(k) * step));
      }
    }
  }
}

double body_scale(const ConvexBody& body) {
  Point2 lo, hi;
  body_bbox(body, lo, hi);
  return dist(lo, hi);
}

// --- clipping ---

namespace {

std::optional<ConvexBody> clip_polygon(const ConvexPolygon& poly, const HalfPlane& hp,
                                        double scale) {
  const auto& v = poly.vertices();
  double tol = 1e-12 * std::max(scale, 1.0);
  bool any_outside = false, any_inside = false;
  for (Point2 p : v) {
    double sd = hp.signed_dist(p);
    if (sd > tol) any_outside = true;
    if (sd < -tol) any_inside = true;
  }
  if (!any_outside) return ConvexBody(poly);  // cut misses the polygon
  if (!any_inside) return std::nullopt;

  std::vector<Point2> out;
  int n = poly.size();
  for (int i = 0; i < n; ++i) {
    Point2 a = v[static_cast<size_t>(i)];
    Point2 b = v[static_cast<size_t>((i + 1) % n)];
    double sa = hp.signed_dist(a);
    double sb = hp.signed_dist(b);
    if (sa <= tol) out.push_back(a);
    if ((sa < -tol && sb > tol) || (sa > tol && sb < -tol)) {
      out.push_back(a + (b - a) * (sa / (sa - sb)));
    }
  }
  out = sanitize_ring(std::move(out), 1e-9 * std::max(scale, 1.0));
  if (out.size() < 3) return std::nullopt;
  ConvexPolygon result(std::move(out));
  if (result.area() <= 1e-12 * scale * scale) return std::nullopt;
  return ConvexBody(std::move(result));
}

struct KeptPiece {
  bool is_arc{false};
  Point2 a, b;
  Point2 center;
  double radius{0.0};
  double ang_a{0.0}, ang_b{0.0};
  double length() const { return is_arc ? radius * (ang_b - ang_a) : dist(a, b); }
};

void keep_arc_range(const BoundaryPiece& pc, double lo, double hi, double min_len,
                    std::vector<KeptPiece>& out) {
  if (hi - lo <= 0.0) return;
  KeptPiece k;
  k.is_arc = true;
  k.center = pc.center;
  k.radius = pc.radius;
  k.ang_a = lo;
  k.ang_b = hi;
  k.a = pc.point_at_angle(lo);
  k.b = pc.point_at_angle(hi);
  if (k.length() > min_len) out.push_back(k);
}

std::optional<ConvexBody> clip_curved(const ConvexBody& body, const HalfPlane& hp, double scale) {
  Boundary boundary(body);
  double tol = 1e-9 * std::max(scale, 1.0);
  std::vector<KeptPiece> kept;

  for (const auto& pc : boundary.pieces()) {
    if (!pc.is_arc) {
      double sa = hp.signed_dist(pc.a);
      double sb = hp.signed_dist(pc.b);
      if (sa <= tol && sb <= tol) {
        kept.push_back({false, pc.a, pc.b, {}, 0, 0, 0});
      } else if (sa <= tol || sb <= tol) {
        Point2 q = pc.a + (pc.b - pc.a) * (sa / (sa - sb));
        KeptPiece k{false, sa <= tol ? pc.a : q, sa <= tol ? q : pc.b, {}, 0, 0, 0};
        if (k.length() > tol) kept.push_back(k);
      }
      continue;
    }
    double s = hp.signed_dist(pc.center);
    if (s <= -pc.radius) {  // whole circle inside
      kept.push_back({true, pc.a, pc.b, pc.center, pc.radius, pc.ang_a, pc.ang_b});
      continue;
    }
    if (s >= pc.radius) continue;  // whole circle outside
    // The inside part of the circle spans alpha +- phi.
    double alpha = std::atan2(-hp.normal.y, -hp.normal.x);
    double phi = std::acos(std::min(1.0, std::max(-1.0, s / pc.radius)));
    for (int shift = -1; shift <= 1; ++shift) {
      double lo = alpha - phi + static_cast<double>(shift) * kTwoPi;
      double hi = alpha + phi + static_cast<double>(shift) * kTwoPi;
      keep_arc_range(pc, std::max(lo, pc.ang_a), std::min(hi, pc.ang_b), tol, kept);
    }
  }

  if (kept.empty()) return std::nullopt;
  double kept_len = 0.0;
  for (const auto& k : kept) kept_len += k.length();
  if (kept_len <= tol) return std::nullopt;

  // The kept boundary of a convex body is one connected chain; locate the
  // single gap and rotate the chain to start just after it.
  size_t m = kept.size();
  std::vector<size_t> gaps;
  for (size_t i = 0; i < m; ++i) {
    if (dist(kept[i].b, kept[(i + 1) % m].a) > tol) gaps.push_back((i + 1) % m);
  }
  if (gaps.empty()) return body;  // cut leaves the whole boundary
  if (gaps.size() > 1) {
    throw Error(ErrorKind::ConstructionFailed, "halfplane cut produced a disconnected boundary");
  }
  std::rotate(kept.begin(), kept.begin() + static_cast<long>(gaps[0]), kept.end());

  // Fuse smooth seams: consecutive arcs of the same circle (as long as the
  // merged sweep stays a half turn at most).
  std::vector<KeptPiece> fused;
  for (const auto& k : kept) {
    if (!fused.empty() && fused.back().is_arc && k.is_arc &&
        dist(fused.back().center, k.center) <= tol &&
        std::abs(fused.back().radius - k.radius) <= tol &&
        (fused.back().ang_b - fused.back().ang_a) + (k.ang_b - k.ang_a) <= kPi + 1e-9) {
      fused.back().ang_b += k.ang_b - k.ang_a;
      fused.back().b = k.b;
      continue;
    }
    fused.push_back(k);
  }
  kept = std::move(fused);

  Point2 entry = kept.front().a;
  Point2 exit = kept.back().b;
  double chord_len = dist(exit, entry);
  if (chord_len <= tol) {
    // Grazing cut: either virtually everything kept, or nothing usable.
    if (kept_len >= boundary.perimeter() - 4.0 * tol) return body;
    return std::nullopt;
  }

  std::vector<ArcGonElement> elems;
  for (const auto& k : kept) {
    if (k.is_arc) {
      elems.push_back(ArcGonElement::arc(k.center, k.radius, k.b));
    } else {
      elems.push_back(ArcGonElement::segment(k.b));
    }
  }
  elems.push_back(ArcGonElement::segment(entry));
  ConvexBody result{ArcGon(entry, std::move(elems))};
  if (body_area(result) <= 1e-12 * scale * scale) return std::nullopt;
  return result;
}

}  // namespace

std::optional<ConvexBody> try_clip_halfplane(const ConvexBody& body, const HalfPlane& hp) {
  double nn = hp.normal.norm();
  if (!(nn > 0.0) || !std::isfinite(nn) || !std::isfinite(hp.offset)) {
    throw Error(ErrorKind::InvalidParameters, "halfplane needs a finite nonzero normal");
  }
  HalfPlane unit{hp.normal * (1.0 / nn), hp.offset / nn};
  double scale = body_scale(body);
  if (body.is_polygon()) return clip_polygon(body.polygon(), unit, scale);
  return clip_curved(body, unit, scale);
}

ConvexBody clip_halfplane(const ConvexBody& body, const HalfPlane& hp) {
  auto r = try_clip_halfplane(body, hp);
  if (!r) throw Error(ErrorKind::EmptyResult, "halfplane cut removed the whole body");
  return std::move(*r);
}

// --- symmetry ---

std::optional<Point2> symmetry_center(const ConvexBody& body) {
  double tol = kEpsSymmetry * std::max(body_scale(body), 1e-300);
  switch (body.kind()) {
    case ConvexBody::Kind::Disc:
      return body.disc().center;
    case ConvexBody::Kind::Polygon: {
      const auto& v = body.polygon().vertices();
      size_t n = v.size();
      if (n % 2 != 0) return std::nullopt;
      size_t h = n / 2;
      Point2 p = 0.5 * (v[0] + v[h]);
      for (size_t i = 0; i < h; ++i) {
        if (dist(v[i] + v[i + h], 2.0 * p) > 2.0 * tol) return std::nullopt;
      }
      return p;
    }
    case ConvexBody::Kind::ArcGon: {
      Boundary b(body);
      const auto& pieces = b.pieces();
      size_t m = pieces.size();
      if (m % 2 != 0) return std::nullopt;
      size_t h = m / 2;
      Point2 p = 0.5 * (pieces[0].a + pieces[h].a);
      for (size_t i = 0; i < m; ++i) {
        const auto& src = pieces[i];
        const auto& dst = pieces[(i + h) % m];
        if (src.is_arc != dst.is_arc) return std::nullopt;
        if (dist(reflect_through(src.a, p), dst.a) > tol) return std::nullopt;
        if (dist(reflect_through(src.b, p), dst.b) > tol) return std::nullopt;
        if (src.is_arc) {
          if (dist(reflect_through(src.center, p), dst.center) > tol) return std::nullopt;
          if (std::abs(src.radius - dst.radius) > tol) return std::nullopt;
        }
      }
      return p;
    }
  }
  return std::nullopt;
}

// --- boundary parametrization entry points ---

Point2 boundary_point_at(const ConvexBody& body, double t) { return Boundary(body).point_at(t); }

double boundary_param_of(const ConvexBody& body, Point2 p) {
  double eps = kEpsOnBoundary * std::max(body_scale(body), 1.0);
  return Boundary(body).param_of(p, eps);
}

// --- transforms ---

ConvexBody transform_body(const ConvexBody& body, double rot, double scale, Point2 shift) {
  if (!(scale > 0.0) || !std::isfinite(scale) || !std::isfinite(rot) || !shift.finite()) {
    throw Error(ErrorKind::InvalidParameters, "similarity needs finite params, scale > 0");
  }
  auto f = [&](Point2 p) { return rotate(p, rot) * scale + shift; };
  switch (body.kind()) {
    case ConvexBody::Kind::Polygon: {
      std::vector<Point2> v;
      v.reserve(static_cast<size_t>(body.polygon().size()));
      for (Point2 p : body.polygon().vertices()) v.push_back(f(p));
      return ConvexBody(ConvexPolygon(std::move(v)));
    }
    case ConvexBody::Kind::Disc: {
      const Disc& d = body.disc();
      return ConvexBody(Disc{f(d.center), d.radius * scale});
    }
    case ConvexBody::Kind::ArcGon: {
      const ArcGon& g = body.arcgon();
      std::vector<ArcGonElement> elems;
      elems.reserve(g.elements().size());
      for (const auto& e : g.elements()) {
        if (e.kind == ArcGonElement::Kind::Segment) {
          elems.push_back(ArcGonElement::segment(f(e.to)));
        } else {
          elems.push_back(ArcGonElement::arc(f(e.center), e.radius * scale, f(e.to)));
        }
      }
      return ConvexBody(ArcGon(f(g.start()), std::move(elems)));
    }
  }
  throw Error(ErrorKind::InvalidParameters, "unknown body kind");
}

ConvexBody reflect_body(const ConvexBody& body, Point2 center) {
  auto f = [&](Point2 p) { return reflect_through(p, center); };
  switch (body.kind()) {
    case ConvexBody::Kind::Polygon: {
      std::vector<Point2> v;
      for (Point2 p : body.polygon().vertices()) v.push_back(f(p));
      return ConvexBody(ConvexPolygon(std::move(v)));
    }
    case ConvexBody::Kind::Disc: {
      const Disc& d = body.disc();
      return ConvexBody(Disc{f(d.center), d.radius});
    }
    case ConvexBody::Kind::ArcGon: {
      const ArcGon& g = body.arcgon();
      std::vector<ArcGonElement> elems;
      for (const auto& e : g.elements()) {
        if (e.kind == ArcGonElement::Kind::Segment) {
          elems.push_back(ArcGonElement::segment(f(e.to)));
        } else {
          elems.push_back(ArcGonElement::arc(f(e.center), e.radius, f(e.to)));
        }
      }
      return ConvexBody(ArcGon(f(g.start()), std::move(elems)));
    }
  }
  throw Error(ErrorKind::InvalidParameters, "unknown body kind");
}

}  // namespace borsuk
