#include "borsuk/diameter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace borsuk {

namespace {

constexpr double kTolT = 1e-9;  // boundary-param coincidence tolerance

double circ_dist(double a, double b) {
  double d = wrap_unit(a - b);
  return std::min(d, 1.0 - d);
}

// Forward gap from e to s, treating tiny negative (fp noise) as zero.
// Real gaps never approach a full turn: chord endpoints are at least
// D/perimeter >= 1/pi of the boundary apart.
double forward_gap(double e, double s) {
  double g = wrap_unit(s - e);
  return g > 1.0 - 1e-6 ? 0.0 : g;
}

}  // namespace

// --- rotating calipers ---

std::vector<std::pair<int, int>> antipodal_pairs(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  int n = poly.size();
  std::vector<std::pair<int, int>> out;
  if (n == 3) {
    out = {{0, 1}, {0, 2}, {1, 2}};
    return out;
  }
  auto h = [&](int i, int i2, int k) {
    return cross(v[static_cast<size_t>(i)], v[static_cast<size_t>(i2)],
                 v[static_cast<size_t>(k)]);
  };
  int j = 1;
  long advances = 0;
  for (int i = 0; i < n; ++i) {
    int i2 = (i + 1) % n;
    while (h(i, i2, (j + 1) % n) > h(i, i2, j)) {
      j = (j + 1) % n;
      if (++advances > 4L * n) {
        throw Error(ErrorKind::ConstructionFailed, "caliper sweep failed to terminate");
      }
    }
    // Record the supporting vertex and its successor; the successor covers
    // parallel-edge ties without an equality test.
    int j2 = (j + 1) % n;
    out.push_back({i, j});
    out.push_back({i2, j});
    out.push_back({i, j2});
    out.push_back({i2, j2});
  }
  for (auto& pr : out) {
    if (pr.first > pr.second) std::swap(pr.first, pr.second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const std::pair<int, int>& p) { return p.first == p.second; }),
            out.end());
  return out;
}

// --- curved-body candidate enumeration ---

namespace {

struct Corner {
  Point2 p;
  double t;
};

struct ArcInfo {
  Point2 center;
  double radius{0.0};
  double ang_a{0.0}, ang_b{0.0};
  double t0{0.0};
  double t_per_rad{0.0};  // boundary param per radian

  double t_of(double ang) const { return wrap_unit(t0 + (ang - ang_a) * t_per_rad); }
  bool holds_angle(double ang, double slack) const {
    double d = wrap_angle(ang - ang_a);
    return d <= (ang_b - ang_a) + slack || d >= kTwoPi - slack;
  }
};

struct CurvedPairs {
  double diameter{0.0};
  Chord witness;
  std::vector<Chord> chords;
  std::vector<DiameterFamily> families;
};

bool on_circle_range(Point2 p, const ArcInfo& arc, double pos_tol, double ang_slack) {
  if (std::abs(dist(p, arc.center) - arc.radius) > pos_tol) return false;
  double ang = std::atan2(p.y - arc.center.y, p.x - arc.center.x);
  return arc.holds_angle(ang, ang_slack);
}

CurvedPairs curved_diameter_pairs(const ConvexBody& body, double eps_rel) {
  Boundary bd(body);
  double scale = body_scale(body);
  double pos_tol = 1e-9 * scale;

  std::vector<Corner> corners;
  std::vector<ArcInfo> arcs;
  for (const auto& pc : bd.pieces()) {
    corners.push_back({pc.a, pc.t0});
    if (pc.is_arc) {
      ArcInfo a;
      a.center = pc.center;
      a.radius = pc.radius;
      a.ang_a = pc.ang_a;
      a.ang_b = pc.ang_b;
      a.t0 = pc.t0;
      a.t_per_rad = pc.radius / bd.perimeter();
      arcs.push_back(a);
    }
  }

  // Phase 1: the diameter. Candidates: corner-corner, corner vs far arc
  // point, far points of two arcs, and antipodal same-circle arc overlaps.
  double D = 0.0;
  Chord witness{corners.front().p, corners.front().p};
  auto consider = [&](Point2 a, Point2 b) {
    double d = dist(a, b);
    if (d > D) {
      D = d;
      witness = {a, b};
    }
  };
  for (size_t i = 0; i < corners.size(); ++i) {
    for (size_t j = i + 1; j < corners.size(); ++j) consider(corners[i].p, corners[j].p);
  }
  for (const auto& c : corners) {
    for (const auto& a : arcs) {
      double dc = dist(c.p, a.center);
      if (dc <= pos_tol) {
        // corner at the arc's center: the whole arc is equidistant
        if (a.radius > D) {
          D = a.radius;
          witness = {c.p, a.center + a.radius * dir(0.5 * (a.ang_a + a.ang_b))};
        }
        continue;
      }
      double ang = std::atan2(a.center.y - c.p.y, a.center.x - c.p.x);
      if (a.holds_angle(ang, 0.0)) {
        consider(c.p, a.center + a.radius * dir(ang));
      }
    }
  }
  for (size_t i = 0; i < arcs.size(); ++i) {
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      const ArcInfo& A = arcs[i];
      const ArcInfo& B = arcs[j];
      double dc = dist(A.center, B.center);
      if (dc > pos_tol || std::abs(A.radius - B.radius) > pos_tol) {
        if (dc <= pos_tol) continue;  // concentric, different radii: no far pair inside ranges
        double angA = std::atan2(A.center.y - B.center.y, A.center.x - B.center.x);
        double angB = angA + kPi;
        if (A.holds_angle(angA, 0.0) && B.holds_angle(angB, 0.0)) {
          consider(A.center + A.radius * dir(angA), B.center + B.radius * dir(angB));
        }
        continue;
      }
      // same circle: any antipodal overlap realizes 2r
      for (int k = -3; k <= 3; ++k) {
        double lo = std::max(A.ang_a, B.ang_a + kPi + kTwoPi * k);
        double hi = std::min(A.ang_b, B.ang_b + kPi + kTwoPi * k);
        if (hi - lo > pos_tol / A.radius && 2.0 * A.radius > D) {
          D = 2.0 * A.radius;
          double mid = 0.5 * (lo + hi);
          witness = {A.center + A.radius * dir(mid), A.center - A.radius * dir(mid)};
        }
      }
    }
  }
  if (D <= 0.0) throw Error(ErrorKind::DegenerateInput, "body has zero diameter");

  // Phase 2: collect realizers at the eps_rel level.
  CurvedPairs out;
  out.diameter = D;
  out.witness = witness;
  double cut = D * (1.0 - eps_rel);
  double fam_tol = D * std::max(eps_rel, 1e-12);
  double member_tol = std::max(1e-7 * D, 10.0 * fam_tol);

  for (size_t i = 0; i < corners.size(); ++i) {
    for (size_t j = i + 1; j < corners.size(); ++j) {
      if (dist(corners[i].p, corners[j].p) >= cut) {
        out.chords.push_back({corners[i].p, corners[j].p});
      }
    }
  }
  for (const auto& c : corners) {
    for (const auto& a : arcs) {
      double dc = dist(c.p, a.center);
      if (dc <= pos_tol) continue;  // vertex-arc family, handled below
      double ang = std::atan2(a.center.y - c.p.y, a.center.x - c.p.x);
      if (a.holds_angle(ang, 0.0) && dc + a.radius >= cut) {
        out.chords.push_back({c.p, a.center + a.radius * dir(ang)});
      }
    }
  }
  for (size_t i = 0; i < arcs.size(); ++i) {
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      const ArcInfo& A = arcs[i];
      const ArcInfo& B = arcs[j];
      double dc = dist(A.center, B.center);
      if (dc > pos_tol) {
        double angA = std::atan2(A.center.y - B.center.y, A.center.x - B.center.x);
        double angB = angA + kPi;
        if (A.holds_angle(angA, 0.0) && B.holds_angle(angB, 0.0) &&
            dc + A.radius + B.radius >= cut) {
          out.chords.push_back(
              {A.center + A.radius * dir(angA), B.center + B.radius * dir(angB)});
        }
      }
    }
  }

  // vertex-arc families: a corner sitting at an arc's center with radius D
  for (const auto& c : corners) {
    for (const auto& a : arcs) {
      if (dist(c.p, a.center) <= fam_tol && std::abs(a.radius - D) <= fam_tol) {
        DiameterFamily f;
        f.kind = DiameterFamily::Kind::VertexArc;
        f.vertex = c.p;
        f.vertex_t = c.t;
        f.range_a = {a.t_of(a.ang_a), a.t_of(a.ang_b), false};
        f.center = a.center;
        f.radius = a.radius;
        out.families.push_back(f);
      }
    }
  }
  // arc-arc families: same circle with 2r = D, antipodally overlapping
  for (size_t i = 0; i < arcs.size(); ++i) {
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      const ArcInfo& A = arcs[i];
      const ArcInfo& B = arcs[j];
      if (dist(A.center, B.center) > pos_tol || std::abs(A.radius - B.radius) > pos_tol) {
        continue;
      }
      if (std::abs(2.0 * A.radius - D) > fam_tol) continue;
      for (int k = -3; k <= 3; ++k) {
        double lo = std::max(A.ang_a, B.ang_a + kPi + kTwoPi * k);
        double hi = std::min(A.ang_b, B.ang_b + kPi + kTwoPi * k);
        if (hi - lo <= pos_tol / A.radius) continue;
        DiameterFamily f;
        f.kind = DiameterFamily::Kind::ArcArc;
        f.range_a = {A.t_of(lo), A.t_of(hi), false};
        double lam = lo - kPi;
        while (lam < B.ang_a - 1e-9) lam += kTwoPi;
        while (lam > B.ang_b + 1e-9) lam -= kTwoPi;
        f.range_b = {B.t_of(lam), B.t_of(lam + (hi - lo)), false};
        f.center = A.center;
        f.radius = A.radius;
        out.families.push_back(f);
      }
    }
  }

  // Drop chords that are instances of a family.
  double ang_slack = member_tol / (scale > 0 ? scale : 1.0);
  auto family_covers = [&](const Chord& ch) {
    for (const auto& f : out.families) {
      if (f.kind == DiameterFamily::Kind::VertexArc) {
        // reconstruct the angular span of range_a on the family circle
        for (const auto& a : arcs) {
          if (dist(a.center, f.center) <= pos_tol && std::abs(a.radius - f.radius) <= pos_tol) {
            if ((dist(ch.a, f.vertex) <= member_tol && on_circle_range(ch.b, a, member_tol, ang_slack)) ||
                (dist(ch.b, f.vertex) <= member_tol && on_circle_range(ch.a, a, member_tol, ang_slack))) {
              return true;
            }
          }
        }
      } else {
        bool a_on = std::abs(dist(ch.a, f.center) - f.radius) <= member_tol;
        bool b_on = std::abs(dist(ch.b, f.center) - f.radius) <= member_tol;
        if (!a_on || !b_on) continue;
        double pa, pb;
        try {
          pa = bd.param_of(ch.a, member_tol);
          pb = bd.param_of(ch.b, member_tol);
        } catch (const Error&) {
          continue;
        }
        double slack_t = member_tol / bd.perimeter();
        if ((f.range_a.contains(pa, slack_t) && f.range_b.contains(pb, slack_t)) ||
            (f.range_a.contains(pb, slack_t) && f.range_b.contains(pa, slack_t))) {
          return true;
        }
      }
    }
    return false;
  };
  out.chords.erase(std::remove_if(out.chords.begin(), out.chords.end(), family_covers),
                   out.chords.end());

  // Deduplicate chords (same endpoint set).
  std::vector<Chord> dedup;
  for (const auto& ch : out.chords) {
    Chord c = ch;
    if (std::make_pair(c.b.x, c.b.y) < std::make_pair(c.a.x, c.a.y)) std::swap(c.a, c.b);
    bool seen = false;
    for (const auto& d : dedup) {
      if (dist(d.a, c.a) <= pos_tol && dist(d.b, c.b) <= pos_tol) {
        seen = true;
        break;
      }
    }
    if (!seen) dedup.push_back(c);
  }
  out.chords = std::move(dedup);
  return out;
}

}  // namespace

// --- public diameter operations ---

std::pair<double, Chord> diameter(const ConvexBody& body) {
  if (body.is_polygon()) {
    const auto& v = body.polygon().vertices();
    auto pairs = antipodal_pairs(body.polygon());
    double best = -1.0;
    Chord w{v[0], v[0]};
    for (auto [i, j] : pairs) {
      double d = dist(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
      if (d > best) {
        best = d;
        w = {v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]};
      }
    }
    return {best, w};
  }
  if (body.is_disc()) {
    const Disc& d = body.disc();
    return {2.0 * d.radius,
            Chord{d.center + Point2{d.radius, 0}, d.center - Point2{d.radius, 0}}};
  }
  CurvedPairs cp = curved_diameter_pairs(body, kEpsDiameterRel);
  return {cp.diameter, cp.witness};
}

DiameterPairs diameter_pairs(const ConvexBody& body, double eps_rel) {
  if (eps_rel < 0.0 || eps_rel > 1e-3) {
    throw Error(ErrorKind::InvalidParameters, "eps_rel must lie in [0, 1e-3]");
  }
  DiameterPairs out;
  if (body.is_polygon()) {
    const auto& v = body.polygon().vertices();
    auto pairs = antipodal_pairs(body.polygon());
    double D = 0.0;
    for (auto [i, j] : pairs) {
      D = std::max(D, dist(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]));
    }
    out.diameter = D;
    for (auto [i, j] : pairs) {
      if (dist(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]) >= D * (1.0 - eps_rel)) {
        out.chords.push_back({v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]});
      }
    }
    return out;
  }
  CurvedPairs cp = curved_diameter_pairs(body, eps_rel);
  out.diameter = cp.diameter;
  out.chords = std::move(cp.chords);
  out.families = std::move(cp.families);
  return out;
}

// --- graph construction ---

namespace {

struct Atom {
  bool is_arc{false};
  double t{0.0};
  Point2 p;
  TRange range;
  Point2 center;
  double radius{0.0};
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

bool arcs_should_merge(const Atom& a, const Atom& b, double pos_tol) {
  double la = a.range.length(), lb = b.range.length();
  // interior overlap
  double u = wrap_unit(b.range.t0 - a.range.t0);
  if (u < la - kTolT) return true;
  double w = wrap_unit(a.range.t0 - b.range.t0);
  if (w < lb - kTolT) return true;
  // touching endpoints on the same circle (smooth continuation)
  bool same_circle =
      dist(a.center, b.center) <= 10.0 * pos_tol && std::abs(a.radius - b.radius) <= 10.0 * pos_tol;
  if (!same_circle) return false;
  if (circ_dist(wrap_unit(a.range.t0 + la), b.range.t0) <= kTolT) return true;
  if (circ_dist(wrap_unit(b.range.t0 + lb), a.range.t0) <= kTolT) return true;
  return false;
}

bool point_inside_arc(const Atom& pt, const Atom& arc) {
  double u = wrap_unit(pt.t - arc.range.t0);
  return u >= kTolT && u <= arc.range.length() - kTolT;
}

// Union of a connected group of circular intervals: one arc, or the full
// boundary.
TRange union_of_ranges(const std::vector<TRange>& ranges) {
  if (ranges.size() == 1) return ranges[0];
  // pick a start not covered from behind by another interval
  int start_idx = -1;
  for (size_t i = 0; i < ranges.size(); ++i) {
    bool covered = false;
    for (size_t j = 0; j < ranges.size() && !covered; ++j) {
      if (j == i) continue;
      double u = wrap_unit(ranges[i].t0 - ranges[j].t0);
      if (u > 0.0 && u <= ranges[j].length() + kTolT) covered = true;
    }
    if (!covered) {
      if (start_idx < 0 || ranges[i].t0 < ranges[static_cast<size_t>(start_idx)].t0) {
        start_idx = static_cast<int>(i);
      }
    }
  }
  if (start_idx < 0) return {0.0, 1.0, true};  // every start covered: full circle
  double s = ranges[static_cast<size_t>(start_idx)].t0;
  double reach = ranges[static_cast<size_t>(start_idx)].length();
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& r : ranges) {
      double off = wrap_unit(r.t0 - s);
      if (off <= reach + kTolT && off + r.length() > reach) {
        reach = off + r.length();
        grew = true;
      }
    }
    if (reach >= 1.0 - kTolT) return {0.0, 1.0, true};
  }
  return {s, wrap_unit(s + reach), false};
}

}  // namespace

DiameterGraph build_diameter_graph(const ConvexBody& body, double eps_rel) {
  DiameterPairs pairs = diameter_pairs(body, eps_rel);
  Boundary bd(body);
  double scale = body_scale(body);
  double pos_tol = 1e-9 * std::max(scale, 1.0);
  double param_eps = 1e-6 * std::max(scale, 1.0);

  std::vector<Atom> atoms;
  // (atom index pairs that must become edges, plus the realizing chord)
  struct PendingEdge {
    int a, b;
    std::optional<Chord> chord;
  };
  std::vector<PendingEdge> pending;

  auto add_point_atom = [&](Point2 p) {
    Atom a;
    a.is_arc = false;
    a.p = p;
    a.t = bd.param_of(p, param_eps);
    atoms.push_back(a);
    return static_cast<int>(atoms.size() - 1);
  };
  auto add_arc_atom = [&](const TRange& r, Point2 center, double radius) {
    Atom a;
    a.is_arc = true;
    a.range = r;
    a.center = center;
    a.radius = radius;
    atoms.push_back(a);
    return static_cast<int>(atoms.size() - 1);
  };

  for (const auto& ch : pairs.chords) {
    int ia = add_point_atom(ch.a);
    int ib = add_point_atom(ch.b);
    pending.push_back({ia, ib, ch});
  }
  for (const auto& f : pairs.families) {
    if (f.kind == DiameterFamily::Kind::VertexArc) {
      int iv = add_point_atom(f.vertex);
      int ir = add_arc_atom(f.range_a, f.center, f.radius);
      pending.push_back({iv, ir, std::nullopt});
    } else {
      int ia = add_arc_atom(f.range_a, f.center, f.radius);
      int ib = add_arc_atom(f.range_b, f.center, f.radius);
      pending.push_back({ia, ib, std::nullopt});
    }
  }

  // merge atoms into classes
  UnionFind uf(atoms.size());
  for (size_t i = 0; i < atoms.size(); ++i) {
    for (size_t j = i + 1; j < atoms.size(); ++j) {
      const Atom& A = atoms[i];
      const Atom& B = atoms[j];
      bool merge = false;
      if (A.is_arc && B.is_arc) {
        merge = arcs_should_merge(A, B, pos_tol);
      } else if (!A.is_arc && !B.is_arc) {
        merge = circ_dist(A.t, B.t) <= kTolT || dist(A.p, B.p) <= pos_tol;
      } else {
        const Atom& pt = A.is_arc ? B : A;
        const Atom& arc = A.is_arc ? A : B;
        merge = point_inside_arc(pt, arc);
      }
      if (merge) uf.unite(static_cast<int>(i), static_cast<int>(j));
    }
  }

  // build classes per union-find root
  std::vector<int> root_of(atoms.size());
  std::vector<int> roots;
  for (size_t i = 0; i < atoms.size(); ++i) {
    root_of[i] = uf.find(static_cast<int>(i));
    if (root_of[i] == static_cast<int>(i)) roots.push_back(static_cast<int>(i));
  }

  DiameterGraph g;
  g.diameter = pairs.diameter;
  if (!pairs.chords.empty()) {
    g.witness = pairs.chords.front();
  } else if (!pairs.families.empty()) {
    const auto& f = pairs.families.front();
    Point2 far = boundary_point_at(body, f.range_a.midpoint());
    g.witness = {f.kind == DiameterFamily::Kind::VertexArc ? f.vertex
                                                           : 2.0 * f.center - far,
                 far};
  } else {
    throw Error(ErrorKind::ConstructionFailed, "no diameter realizers found");
  }

  std::vector<int> class_of_root(atoms.size(), -1);
  for (int r : roots) {
    std::vector<TRange> arc_ranges;
    Point2 circle_center{};
    double circle_radius = 0.0;
    const Atom* best_point = nullptr;
    for (size_t i = 0; i < atoms.size(); ++i) {
      if (root_of[i] != r) continue;
      if (atoms[i].is_arc) {
        arc_ranges.push_back(atoms[i].range);
        circle_center = atoms[i].center;
        circle_radius = atoms[i].radius;
      } else if (!best_point || atoms[i].t < best_point->t) {
        best_point = &atoms[i];
      }
    }
    VertexClass vc;
    if (!arc_ranges.empty()) {
      vc.kind = VertexClass::Kind::BoundaryArc;
      vc.range = union_of_ranges(arc_ranges);
      vc.closed = true;
      vc.arc_center = circle_center;
      vc.arc_radius = circle_radius;
      vc.point = boundary_point_at(body, vc.range.t0);
      vc.t = vc.range.t0;
    } else {
      vc.kind = VertexClass::Kind::IsolatedPoint;
      vc.point = best_point->p;
      vc.t = best_point->t;
    }
    class_of_root[static_cast<size_t>(r)] = static_cast<int>(g.classes.size());
    g.classes.push_back(vc);
  }

  // snap isolated points onto coincident arc endpoints so circular sorting
  // and the gap checks below see exact ties instead of ulp noise
  for (auto& c : g.classes) {
    if (c.is_arc()) continue;
    for (const auto& other : g.classes) {
      if (!other.is_arc()) continue;
      for (double cand : {other.range.t0, other.range.t1}) {
        double fwd = wrap_unit(c.t - cand);
        double d = std::min(fwd, 1.0 - fwd);
        if (d > 0.0 && d <= kTolT) c.t = cand;
      }
    }
  }

  // circular order (points before arcs on equal keys), then remap edges
  std::vector<int> order(g.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const VertexClass& A = g.classes[static_cast<size_t>(a)];
    const VertexClass& B = g.classes[static_cast<size_t>(b)];
    if (A.order_key() != B.order_key()) return A.order_key() < B.order_key();
    return A.is_arc() < B.is_arc();
  });
  std::vector<int> new_index(g.classes.size());
  std::vector<VertexClass> sorted;
  sorted.reserve(g.classes.size());
  for (size_t k = 0; k < order.size(); ++k) {
    new_index[static_cast<size_t>(order[k])] = static_cast<int>(k);
    sorted.push_back(g.classes[static_cast<size_t>(order[k])]);
  }
  g.classes = std::move(sorted);

  for (const auto& pe : pending) {
    int u = new_index[static_cast<size_t>(class_of_root[static_cast<size_t>(root_of[static_cast<size_t>(pe.a)])])];
    int v = new_index[static_cast<size_t>(class_of_root[static_cast<size_t>(root_of[static_cast<size_t>(pe.b)])])];
    if (u > v) std::swap(u, v);
    bool seen = false;
    for (auto& e : g.edges) {
      if (e.u == u && e.v == v) {
        seen = true;
        if (!e.chord && pe.chord) e.chord = pe.chord;
        break;
      }
    }
    if (!seen) g.edges.push_back({u, v, pe.chord});
  }

  // boundary cover test: no positive gap between consecutive classes
  bool cover = false;
  for (const auto& c : g.classes) cover = cover || (c.is_arc() && c.range.full);
  if (!cover && !g.classes.empty()) {
    bool any_arc = false;
    for (const auto& c : g.classes) any_arc = any_arc || c.is_arc();
    if (any_arc) {
      cover = true;
      size_t k = g.classes.size();
      for (size_t i = 0; i < k && cover; ++i) {
        const VertexClass& cur = g.classes[i];
        const VertexClass& nxt = g.classes[(i + 1) % k];
        double end = cur.is_arc() ? cur.range.t1 : cur.t;
        double start = nxt.is_arc() ? nxt.range.t0 : nxt.t;
        if (forward_gap(end, start) > kTolT) cover = false;
      }
    }
  }
  g.classes_cover_boundary = cover;
  return g;
}

// --- bipartiteness and separation ---

std::optional<std::vector<int>> find_odd_cycle(const DiameterGraph& g) {
  size_t k = g.classes.size();
  std::vector<std::vector<int>> adj(k);
  for (const auto& e : g.edges) {
    if (e.u == e.v) return std::vector<int>{e.u};  // self-relation
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> color(k, -1), parent(k, -1);
  for (size_t s = 0; s < k; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> queue{static_cast<int>(s)};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : adj[static_cast<size_t>(u)]) {
        if (color[static_cast<size_t>(v)] == -1) {
          color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
          parent[static_cast<size_t>(v)] = u;
          queue.push_back(v);
        } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
          // odd cycle: join the two tree paths at their lowest common ancestor
          std::vector<int> pu{u}, pv{v};
          while (pu.back() != -1) pu.push_back(parent[static_cast<size_t>(pu.back())]);
          pu.pop_back();
          while (pv.back() != -1) pv.push_back(parent[static_cast<size_t>(pv.back())]);
          pv.pop_back();
          // trim the common tail
          while (pu.size() >= 2 && pv.size() >= 2 &&
                 pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          std::vector<int> cycle(pu.begin(), pu.end());
          for (size_t i = pv.size() - 1; i-- > 0;) cycle.push_back(pv[i]);
          return cycle;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<SeparatedColoring> is_bipartite_with_separation(const DiameterGraph& g) {
  if (g.classes_cover_boundary) return std::nullopt;
  size_t k = g.classes.size();
  if (k < 2) return std::nullopt;

  std::vector<double> gap(k), gap_start(k);
  for (size_t i = 0; i < k; ++i) {
    const VertexClass& cur = g.classes[i];
    const VertexClass& nxt = g.classes[(i + 1) % k];
    double end = cur.is_arc() ? cur.range.t1 : cur.t;
    double start = nxt.is_arc() ? nxt.range.t0 : nxt.t;
    gap[i] = forward_gap(end, start);
    gap_start[i] = end;
  }

  double best = -1.0;
  int bi = -1, bj = -1;
  for (size_t i = 0; i < k; ++i) {
    if (gap[i] < kMinGapRel) continue;
    for (size_t j = i + 1; j < k; ++j) {
      if (gap[j] < kMinGapRel) continue;
      // classes i+1..j form one group, the rest the other
      bool proper = true;
      for (const auto& e : g.edges) {
        bool ur = static_cast<size_t>(e.u) > i && static_cast<size_t>(e.u) <= j;
        bool vr = static_cast<size_t>(e.v) > i && static_cast<size_t>(e.v) <= j;
        if (ur == vr) {
          proper = false;
          break;
        }
      }
      if (!proper) continue;
      // near-equal scores count as ties so rotationally symmetric inputs
      // resolve to the last candidate in index order, not to float noise
      double score = std::min(gap[i], gap[j]);
      if (score > best - kTolT) {
        best = std::max(best, score);
        bi = static_cast<int>(i);
        bj = static_cast<int>(j);
      }
    }
  }
  if (bi < 0) return std::nullopt;

  SeparatedColoring sc;
  auto class_start = [&](size_t c) {
    return g.classes[c].is_arc() ? g.classes[c].range.t0 : g.classes[c].t;
  };
  auto class_end = [&](size_t c) {
    return g.classes[c].is_arc() ? g.classes[c].range.t1 : g.classes[c].t;
  };
  size_t first_red = static_cast<size_t>(bi) + 1;
  size_t first_blue = (static_cast<size_t>(bj) + 1) % k;
  sc.red_arc = {class_start(first_red), class_end(static_cast<size_t>(bj)), false};
  sc.blue_arc = {class_start(first_blue), class_end(static_cast<size_t>(bi)), false};
  sc.gap1 = {gap_start[static_cast<size_t>(bi)],
             wrap_unit(gap_start[static_cast<size_t>(bi)] + gap[static_cast<size_t>(bi)]), false};
  sc.gap2 = {gap_start[static_cast<size_t>(bj)],
             wrap_unit(gap_start[static_cast<size_t>(bj)] + gap[static_cast<size_t>(bj)]), false};
  sc.colors.resize(k);
  for (size_t c = 0; c < k; ++c) {
    sc.colors[c] = (c > static_cast<size_t>(bi) && c <= static_cast<size_t>(bj)) ? 0 : 1;
  }
  return sc;
}

}  // namespace borsuk
