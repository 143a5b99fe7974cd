#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "borsuk/geometry.hpp"

namespace borsuk {

// Circular interval of boundary parameters, running ccw from t0 to t1.
struct TRange {
  double t0{0.0};
  double t1{0.0};
  bool full{false};  // whole boundary

  double length() const { return full ? 1.0 : wrap_unit(t1 - t0); }
  double midpoint() const { return full ? 0.0 : wrap_unit(t0 + 0.5 * length()); }
  bool contains(double t, double eps = 0.0) const {
    if (full) return true;
    double u = wrap_unit(t - t0);
    return u <= length() + eps || u >= 1.0 - eps;
  }
};

// A continuum of diameter pairs.
//  VertexArc: every point of range_a pairs with the fixed vertex.
//  ArcArc: every point of range_a pairs with its antipode in range_b on the
//  shared circle (center, radius), where 2*radius equals the diameter.
struct DiameterFamily {
  enum class Kind { VertexArc, ArcArc };
  Kind kind{Kind::VertexArc};
  Point2 vertex;
  double vertex_t{0.0};
  TRange range_a;
  TRange range_b;
  Point2 center;
  double radius{0.0};
};

struct DiameterPairs {
  double diameter{0.0};
  std::vector<Chord> chords;               // isolated realizing segments
  std::vector<DiameterFamily> families;    // symbolic continua (curved bodies)
};

// Maximal connected subset of the diameter-endpoint set V on the boundary.
struct VertexClass {
  enum class Kind { IsolatedPoint, BoundaryArc };
  Kind kind{Kind::IsolatedPoint};
  Point2 point;          // IsolatedPoint location
  double t{0.0};         // IsolatedPoint boundary param
  TRange range;          // BoundaryArc extent
  bool closed{true};     // arcs include their endpoints
  Point2 arc_center;     // circle carrying a BoundaryArc
  double arc_radius{0.0};

  bool is_arc() const { return kind == Kind::BoundaryArc; }
  TRange extent() const { return is_arc() ? range : TRange{t, t, false}; }
  double order_key() const { return is_arc() ? range.t0 : t; }
};

struct GraphEdge {
  int u{0};
  int v{0};
  std::optional<Chord> chord;  // realizing segment for point-point edges
};

struct DiameterGraph {
  double diameter{0.0};
  Chord witness;
  std::vector<VertexClass> classes;  // circular boundary order
  std::vector<GraphEdge> edges;      // class-level relations
  bool classes_cover_boundary{false};
};

// Proper 2-coloring whose color classes occupy two disjoint closed boundary
// arcs, plus the two complementary gap arcs.
struct SeparatedColoring {
  TRange red_arc;
  TRange blue_arc;
  TRange gap1;
  TRange gap2;
  std::vector<int> colors;  // per class: 0 red, 1 blue
};

// Largest pairwise distance and one realizing chord.
std::pair<double, Chord> diameter(const ConvexBody& body);

// Every realizing pair within (1 - eps_rel) * D, as finite chords plus
// symbolic families for curved bodies.
DiameterPairs diameter_pairs(const ConvexBody& body, double eps_rel = kEpsDiameterRel);

DiameterGraph build_diameter_graph(const ConvexBody& body, double eps_rel = kEpsDiameterRel);

// Searches the circular split positions between consecutive classes for a
// proper 2-coloring with two usable gap arcs; maximizes the smaller gap.
// Returns none immediately when the closed vertex classes cover the
// boundary.
std::optional<SeparatedColoring> is_bipartite_with_separation(const DiameterGraph& graph);

// 2-colorability of the class graph alone (no separation constraint);
// returns an odd closed walk of class indices when the graph is not
// bipartite (a single index for a self-relation).
std::optional<std::vector<int>> find_odd_cycle(const DiameterGraph& graph);

// Rotating-calipers antipodal vertex pairs (superset containing every
// diameter pair); exposed for the brute-force equality tests.
std::vector<std::pair<int, int>> antipodal_pairs(const ConvexPolygon& poly);

}  // namespace borsuk
