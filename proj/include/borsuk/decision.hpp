#pragma once

#include <optional>
#include <string>
#include <vector>

#include "borsuk/diameter.hpp"
#include "borsuk/geometry.hpp"

namespace borsuk {

// How a Borsuk number is witnessed.
//   SeparatedChord        alpha = 2: separated coloring + splitting chord
//   OddCycle              alpha = 3: odd closed walk of length >= 3 in the class graph
//   FullBoundaryVertexSet alpha = 3: the closed vertex arcs cover all of the boundary
//   ClosureContact        alpha = 3: every candidate split's color closures meet
//   EuclideanBall         alpha = 3: the body is a disc (symmetric bodies only)
enum class WitnessKind {
  SeparatedChord,
  OddCycle,
  FullBoundaryVertexSet,
  ClosureContact,
  EuclideanBall,
};

struct BorsukCertificate {
  int alpha{2};
  WitnessKind kind{WitnessKind::SeparatedChord};
  std::optional<SeparatedColoring> coloring;  // present when alpha == 2
  std::optional<Chord> chord;                 // present when alpha == 2
  std::vector<int> cycle;                     // class indices, OddCycle only
  Point2 ball_center{};                       // EuclideanBall only
  double ball_radius{0.0};
  double contact_t{0.0};                      // ClosureContact only
  std::string warning;                        // set when the decision is degraded
};

const char* witness_kind_name(WitnessKind kind);

// Chord joining the midpoints (by boundary parameter) of the two gap arcs.
// Endpoints are ordered lexicographically (x, then y).
Chord splitting_chord(const ConvexBody& body, const SeparatedColoring& coloring);

// General decision on a prebuilt class graph: a separated two-coloring gives
// alpha = 2; otherwise alpha = 3 with the strongest witness available
// (odd cycle, then full-boundary cover, then closure contact).
BorsukCertificate decide_general(const ConvexBody& body, const DiameterGraph& graph);

// Decision for a centrally symmetric body: the vertex classes cover the whole
// boundary exactly for discs (giving the ball witness); otherwise a separated
// coloring exists whenever the gaps are resolvable.
BorsukCertificate decide_symmetric(const ConvexBody& body, const DiameterGraph& graph,
                                   Point2 center);

// Top-level decision: builds the class graph and routes through the symmetric
// path when a symmetry center exists, the general path otherwise.
BorsukCertificate borsuk_number(const ConvexBody& body, double eps_rel = kEpsDiameterRel);

}  // namespace borsuk
