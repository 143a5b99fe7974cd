#pragma once

#include <array>
#include <vector>

#include "borsuk/geometry.hpp"

namespace borsuk {

// Regular hexagon given by center, width (distance between opposite sides)
// and the direction of its first side normal, reduced modulo pi/3.
struct RegularHexagon {
  Point2 center;
  double width{0.0};
  double orientation{0.0};

  // Vertices ccw at angles orientation + pi/6 + k*pi/3, circumradius width/sqrt(3).
  std::array<Point2, 6> vertex_ring() const;
  ConvexPolygon polygon() const;
};

enum class PartitionTag { ChordCut, PalHexagon };

struct Partition {
  explicit Partition(ConvexBody parent_body) : parent(std::move(parent_body)) {}

  ConvexBody parent;
  std::vector<ConvexBody> pieces;
  // the half-plane cuts that carved each piece out of the parent; used by
  // verify_partition to measure pairwise overlaps exactly
  std::vector<std::vector<HalfPlane>> piece_cuts;
  std::vector<double> piece_diameters;
  PartitionTag tag{PartitionTag::ChordCut};
};

struct VerificationReport {
  std::vector<double> piece_diameters;  // sampled estimates, one per piece
  double max_piece_diameter{0.0};
  double margin{0.0};        // D(parent) - max piece diameter
  double area_deficit{0.0};  // |area(parent) - sum of piece areas| / area(parent)
  double max_overlap{0.0};   // largest pairwise intersection area, relative
  bool convex_ok{true};
  bool pass{false};
};

// Split the body along the supporting line of the chord. Throws InvalidCut
// when a piece still attains the parent diameter (an uncertified chord).
Partition two_partition(const ConvexBody& body, const Chord& chord);

// A regular hexagon of width D(C) containing the body: three supporting
// strips at angles theta, theta+pi/3, theta+2pi/3 are symmetrically widened
// to D and intersected; theta is tuned until adjacent sides match.
RegularHexagon pal_hexagon(const ConvexBody& body);

// The classical three-way split of a regular hexagon: segments from the
// center to the midpoints of three alternating sides give three congruent
// pentagons of diameter (sqrt(3)/2) * width.
std::array<ConvexPolygon, 3> hexagon_three_pieces(const RegularHexagon& hex);

// Intersect the body with the three hexagon pieces (two half-plane clips
// per piece); empty intersections are dropped.
Partition three_partition(const ConvexBody& body);

// Independent audit of a partition: sampled piece diameters, margin below
// the parent diameter, area bookkeeping, pairwise overlap, convexity probe.
VerificationReport verify_partition(const ConvexBody& body, const Partition& partition,
                                    int samples = 10000);

}  // namespace borsuk
