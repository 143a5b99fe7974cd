#include "borsuk/decision.hpp"

#include <algorithm>

namespace borsuk {

namespace {

// forward gaps between consecutive classes in circular order, and the
// boundary parameter where the widest one sits
double widest_gap_midpoint(const DiameterGraph& g) {
  size_t k = g.classes.size();
  if (k == 0) return 0.0;
  double best_len = -1.0, best_mid = 0.0;
  for (size_t i = 0; i < k; ++i) {
    const VertexClass& cur = g.classes[i];
    const VertexClass& nxt = g.classes[(i + 1) % k];
    double end = cur.is_arc() ? cur.range.t1 : cur.t;
    double start = nxt.is_arc() ? nxt.range.t0 : nxt.t;
    double len = wrap_unit(start - end);
    // a near-full wrap is float noise between touching classes, not a gap
    // (real gaps never exceed 1 - D/perimeter <= 1 - 1/pi)
    if (len > 1.0 - 1e-6) len = 0.0;
    if (len > best_len) {
      best_len = len;
      best_mid = wrap_unit(end + 0.5 * len);
    }
  }
  return best_mid;
}

BorsukCertificate contact_certificate(const DiameterGraph& g, std::string warning) {
  BorsukCertificate cert;
  cert.alpha = 3;
  cert.kind = WitnessKind::ClosureContact;
  cert.contact_t = widest_gap_midpoint(g);
  cert.warning = std::move(warning);
  return cert;
}

BorsukCertificate two_piece_certificate(const ConvexBody& body, SeparatedColoring coloring) {
  BorsukCertificate cert;
  cert.alpha = 2;
  cert.kind = WitnessKind::SeparatedChord;
  cert.chord = splitting_chord(body, coloring);
  cert.coloring = std::move(coloring);
  return cert;
}

}  // namespace

const char* witness_kind_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::SeparatedChord: return "separated_chord";
    case WitnessKind::OddCycle: return "odd_cycle";
    case WitnessKind::FullBoundaryVertexSet: return "full_boundary_vertex_set";
    case WitnessKind::ClosureContact: return "closure_contact";
    case WitnessKind::EuclideanBall: return "euclidean_ball";
  }
  return "unknown";
}

Chord splitting_chord(const ConvexBody& body, const SeparatedColoring& coloring) {
  Point2 p = boundary_point_at(body, coloring.gap1.midpoint());
  Point2 q = boundary_point_at(body, coloring.gap2.midpoint());
  if (q.x < p.x || (q.x == p.x && q.y < p.y)) std::swap(p, q);
  return {p, q};
}

BorsukCertificate decide_general(const ConvexBody& body, const DiameterGraph& graph) {
  if (auto coloring = is_bipartite_with_separation(graph)) {
    return two_piece_certificate(body, std::move(*coloring));
  }
  // alpha = 3; pick the strongest witness
  if (auto cycle = find_odd_cycle(graph); cycle && cycle->size() >= 3) {
    BorsukCertificate cert;
    cert.alpha = 3;
    cert.kind = WitnessKind::OddCycle;
    cert.cycle = std::move(*cycle);
    return cert;
  }
  if (graph.classes_cover_boundary) {
    BorsukCertificate cert;
    cert.alpha = 3;
    cert.kind = WitnessKind::FullBoundaryVertexSet;
    return cert;
  }
  return contact_certificate(
      graph, "no gap of relative length >= 1e-6 separates the color classes");
}

BorsukCertificate decide_symmetric(const ConvexBody& body, const DiameterGraph& graph,
                                   Point2 center) {
  if (graph.classes_cover_boundary) {
    // for a centrally symmetric body the vertex set fills the boundary
    // exactly when the body is a disc
    BorsukCertificate cert;
    cert.alpha = 3;
    cert.kind = WitnessKind::EuclideanBall;
    cert.ball_center = center;
    cert.ball_radius = 0.5 * graph.diameter;
    return cert;
  }
  if (auto coloring = is_bipartite_with_separation(graph)) {
    return two_piece_certificate(body, std::move(*coloring));
  }
  // a split exists in principle, but every gap is below the resolvable size
  return contact_certificate(
      graph, "symmetric body with partial vertex set but no resolvable gap");
}

BorsukCertificate borsuk_number(const ConvexBody& body, double eps_rel) {
  DiameterGraph graph = build_diameter_graph(body, eps_rel);
  if (auto center = symmetry_center(body)) {
    return decide_symmetric(body, graph, *center);
  }
  return decide_general(body, graph);
}

}  // namespace borsuk
