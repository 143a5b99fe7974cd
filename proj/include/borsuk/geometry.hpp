#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace borsuk {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Relative tolerances (scaled by a body length scale where noted).
inline constexpr double kEpsOnBoundary = 1e-9;   // on-boundary test
inline constexpr double kEpsSymmetry = 1e-9;     // central-symmetry match
inline constexpr double kEpsDiameterRel = 1e-9;  // default diameter-pair cutoff
inline constexpr double kEpsAreaRel = 1e-6;      // tiling / coverage checks
inline constexpr double kMinGapRel = 1e-6;       // usable boundary gap (fraction of perimeter)

enum class ErrorKind {
  DegenerateInput,
  EmptyResult,
  NotOnBoundary,
  InvalidCut,
  ConstructionFailed,
  InvalidParameters,
  SchemaViolation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct Point2 {
  double x{0.0};
  double y{0.0};

  constexpr Point2() = default;
  constexpr Point2(double px, double py) : x(px), y(py) {}

  constexpr Point2 operator+(Point2 r) const { return {x + r.x, y + r.y}; }
  constexpr Point2 operator-(Point2 r) const { return {x - r.x, y - r.y}; }
  constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Point2 operator-() const { return {-x, -y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {p.x * s, p.y * s}; }

  constexpr double dot(Point2 r) const { return x * r.x + y * r.y; }
  constexpr double cross(Point2 r) const { return x * r.y - y * r.x; }
  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
  constexpr Point2 perp() const { return {-y, x}; }  // ccw quarter turn
  Point2 normalized(double eps = 1e-300) const {
    double n = norm();
    if (n <= eps) return {0.0, 0.0};
    return {x / n, y / n};
  }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double dist(Point2 a, Point2 b) { return (a - b).norm(); }
inline double dist2(Point2 a, Point2 b) { return (a - b).norm2(); }
inline double cross(Point2 o, Point2 a, Point2 b) { return (a - o).cross(b - o); }
inline Point2 dir(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline Point2 rotate(Point2 p, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}
inline Point2 reflect_through(Point2 p, Point2 center) { return 2.0 * center - p; }
inline double wrap_angle(double a) {  // into [0, 2*pi)
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}
inline double wrap_unit(double t) {  // into [0, 1)
  t = std::fmod(t, 1.0);
  return t < 0 ? t + 1.0 : t;
}

struct Chord {
  Point2 a;
  Point2 b;
  double length() const { return dist(a, b); }
};

// Closed half-plane {x : normal . x <= offset}. normal is unit length.
struct HalfPlane {
  Point2 normal;
  double offset{0.0};

  static HalfPlane through(Point2 p, Point2 unit_normal) {
    return {unit_normal, unit_normal.dot(p)};
  }
  double signed_dist(Point2 p) const { return normal.dot(p) - offset; }
  bool contains(Point2 p, double eps = 0.0) const { return signed_dist(p) <= eps; }
};

// Strictly convex polygon, counterclockwise vertex order.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  // Validates: >= 3 vertices, finite, strictly convex, ccw (reversed if given cw).
  explicit ConvexPolygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return verts_; }
  int size() const { return static_cast<int>(verts_.size()); }
  Point2 vertex(int i) const { return verts_[static_cast<size_t>(i)]; }

  double area() const;
  double perimeter() const;
  bool contains(Point2 p, double eps) const;

 private:
  std::vector<Point2> verts_;
};

struct Disc {
  Point2 center;
  double radius{0.0};

  double area() const { return kPi * radius * radius; }
  double perimeter() const { return kTwoPi * radius; }
  bool contains(Point2 p, double eps) const { return dist(p, center) <= radius + eps; }
};

struct ArcGonElement {
  enum class Kind { Segment, Arc };
  Kind kind{Kind::Segment};
  Point2 to;       // endpoint of this boundary piece
  Point2 center;   // arc only
  double radius{0.0};  // arc only

  static ArcGonElement segment(Point2 to) { return {Kind::Segment, to, {}, 0.0}; }
  static ArcGonElement arc(Point2 center, double radius, Point2 to) {
    return {Kind::Arc, to, center, radius};
  }
};

// Convex region bounded by line segments and ccw circular arcs.
// Arcs sweep at most pi each; boundary closes back to `start`.
class ArcGon {
 public:
  ArcGon() = default;
  ArcGon(Point2 start, std::vector<ArcGonElement> elements);

  Point2 start() const { return start_; }
  const std::vector<ArcGonElement>& elements() const { return elements_; }

 private:
  Point2 start_;
  std::vector<ArcGonElement> elements_;
};

class ConvexBody {
 public:
  enum class Kind { Polygon, Disc, ArcGon };

  ConvexBody(ConvexPolygon p) : shape_(std::move(p)) {}
  ConvexBody(Disc d);
  ConvexBody(ArcGon a) : shape_(std::move(a)) {}

  Kind kind() const { return static_cast<Kind>(shape_.index()); }
  bool is_polygon() const { return kind() == Kind::Polygon; }
  bool is_disc() const { return kind() == Kind::Disc; }
  bool is_arcgon() const { return kind() == Kind::ArcGon; }

  const ConvexPolygon& polygon() const { return std::get<ConvexPolygon>(shape_); }
  const Disc& disc() const { return std::get<Disc>(shape_); }
  const ArcGon& arcgon() const { return std::get<ArcGon>(shape_); }

 private:
  std::variant<ConvexPolygon, Disc, ArcGon> shape_;
};

// One traversable piece of a body boundary: a segment or a ccw arc.
struct BoundaryPiece {
  bool is_arc{false};
  Point2 a;        // start point
  Point2 b;        // end point
  Point2 center;   // arc only
  double radius{0.0};
  double ang_a{0.0};  // arc start angle; full circle: ang_b = ang_a + 2*pi
  double ang_b{0.0};  // arc end angle, ang_b > ang_a
  double length{0.0};
  double t0{0.0};  // cumulative normalized arc-length offset of `a`

  double sweep() const { return ang_b - ang_a; }
  Point2 point_at_angle(double ang) const { return center + radius * dir(ang); }
};

// Arc-length parametrization of a body boundary, t in [0,1), ccw,
// anchored at the first stored vertex / element start.
class Boundary {
 public:
  explicit Boundary(const ConvexBody& body);

  const std::vector<BoundaryPiece>& pieces() const { return pieces_; }
  double perimeter() const { return perimeter_; }

  Point2 point_at(double t) const;
  // Inverse map; p must lie within eps_abs of the boundary.
  double param_of(Point2 p, double eps_abs) const;
  // n points at equal arc-length spacing; jitter in [0,1) shifts within each cell.
  std::vector<Point2> sample(int n, const std::vector<double>* jitter = nullptr) const;
  std::vector<double> sample_params(int n) const;
  // Piece endpoints (the body's corner points), deduplicated, in boundary order.
  std::vector<Point2> corner_points() const;

 private:
  std::vector<BoundaryPiece> pieces_;
  double perimeter_{0.0};
};

// --- geometry_core operations ---

// Convex hull (strict: collinear boundary points dropped), ccw,
// anchored at the lexicographically smallest vertex.
ConvexPolygon hull_polygon(const std::vector<Point2>& points);

// A point of the body maximizing the inner product with `direction`.
// Positive-length support faces resolve to the face midpoint.
Point2 support_point(const ConvexBody& body, Point2 direction);
double support_value(const ConvexBody& body, Point2 direction);

// Closed intersection body ∩ {x : hp.normal . x <= hp.offset}.
// Returns nullopt when the half-plane misses the body (or leaves only a
// measure-zero sliver). Polygons stay polygons; discs and arc-gons clip
// to arc-gons.  A cut that does not reach the body returns it unchanged.
std::optional<ConvexBody> try_clip_halfplane(const ConvexBody& body, const HalfPlane& hp);
// Throwing wrapper: Error{EmptyResult} when the intersection is empty.
ConvexBody clip_halfplane(const ConvexBody& body, const HalfPlane& hp);

// Center of point symmetry, when the body maps onto itself under the
// half-turn about it (within kEpsSymmetry relative to the body scale).
std::optional<Point2> symmetry_center(const ConvexBody& body);

Point2 boundary_point_at(const ConvexBody& body, double t);
double boundary_param_of(const ConvexBody& body, Point2 p);  // throws NotOnBoundary

double body_area(const ConvexBody& body);
double body_perimeter(const ConvexBody& body);
bool body_contains(const ConvexBody& body, Point2 p, double eps_abs);

// Diagonal of the axis-aligned bounding box; the length scale used by
// relative tolerances.
double body_scale(const ConvexBody& body);
void body_bbox(const ConvexBody& body, Point2& lo, Point2& hi);

// Similarity transform: rotate, then scale, then translate.
ConvexBody transform_body(const ConvexBody& body, double rot, double scale, Point2 shift);
ConvexBody reflect_body(const ConvexBody& body, Point2 center);

}  // namespace borsuk
