#include "borsuk/json_io.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <utility>

namespace borsuk {

namespace {

json point_json(Point2 p) { return json::array({p.x, p.y}); }

Point2 point_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorKind::SchemaViolation, "expected a point as [x, y]");
  }
  Point2 p{j[0].get<double>(), j[1].get<double>()};
  if (!p.finite()) throw Error(ErrorKind::SchemaViolation, "point coordinates must be finite");
  return p;
}

json chord_json(const Chord& c) { return json::array({point_json(c.a), point_json(c.b)}); }

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw Error(ErrorKind::SchemaViolation, std::string("missing numeric field '") + key + "'");
  }
  return j[key].get<double>();
}

const json& array_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw Error(ErrorKind::SchemaViolation, std::string("missing array field '") + key + "'");
  }
  return j[key];
}

const char* kind_string(ConvexBody::Kind k) {
  switch (k) {
    case ConvexBody::Kind::Polygon: return "polygon";
    case ConvexBody::Kind::Disc: return "disc";
    default: return "arcgon";
  }
}

}  // namespace

json body_to_json(const ConvexBody& body) {
  json j;
  switch (body.kind()) {
    case ConvexBody::Kind::Polygon: {
      j["type"] = "polygon";
      json verts = json::array();
      for (Point2 v : body.polygon().vertices()) verts.push_back(point_json(v));
      j["vertices"] = std::move(verts);
      break;
    }
    case ConvexBody::Kind::Disc:
      j["type"] = "disc";
      j["center"] = point_json(body.disc().center);
      j["radius"] = body.disc().radius;
      break;
    case ConvexBody::Kind::ArcGon: {
      j["type"] = "arcgon";
      j["start"] = point_json(body.arcgon().start());
      json els = json::array();
      for (const ArcGonElement& e : body.arcgon().elements()) {
        json ej;
        if (e.kind == ArcGonElement::Kind::Segment) {
          ej["kind"] = "seg";
          ej["to"] = point_json(e.to);
        } else {
          ej["kind"] = "arc";
          ej["center"] = point_json(e.center);
          ej["radius"] = e.radius;
          ej["to"] = point_json(e.to);
        }
        els.push_back(std::move(ej));
      }
      j["elements"] = std::move(els);
      break;
    }
  }
  return j;
}

ConvexBody body_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw Error(ErrorKind::SchemaViolation, "body needs a string 'type' field");
  }
  std::string type = j["type"].get<std::string>();
  if (type == "polygon") {
    const json& verts = array_field(j, "vertices");
    std::vector<Point2> pts;
    for (const json& v : verts) pts.push_back(point_from(v));
    return ConvexBody(ConvexPolygon(std::move(pts)));
  }
  if (type == "disc") {
    if (!j.contains("center")) throw Error(ErrorKind::SchemaViolation, "disc needs 'center'");
    return ConvexBody(Disc{point_from(j["center"]), number_field(j, "radius")});
  }
  if (type == "arcgon") {
    if (!j.contains("start")) throw Error(ErrorKind::SchemaViolation, "arcgon needs 'start'");
    Point2 start = point_from(j["start"]);
    std::vector<ArcGonElement> elements;
    bool any_arc = false;
    for (const json& ej : array_field(j, "elements")) {
      if (!ej.is_object() || !ej.contains("kind") || !ej["kind"].is_string() ||
          !ej.contains("to")) {
        throw Error(ErrorKind::SchemaViolation, "arcgon element needs 'kind' and 'to'");
      }
      std::string kind = ej["kind"].get<std::string>();
      if (kind == "seg") {
        elements.push_back(ArcGonElement::segment(point_from(ej["to"])));
      } else if (kind == "arc") {
        if (!ej.contains("center")) {
          throw Error(ErrorKind::SchemaViolation, "arc element needs 'center'");
        }
        elements.push_back(ArcGonElement::arc(point_from(ej["center"]),
                                              number_field(ej, "radius"),
                                              point_from(ej["to"])));
        any_arc = true;
      } else {
        throw Error(ErrorKind::SchemaViolation, "arcgon element kind must be 'seg' or 'arc'");
      }
    }
    if (!any_arc) {
      // pure-segment outline: restore the polygon representation
      std::vector<Point2> pts{start};
      for (const ArcGonElement& e : elements) pts.push_back(e.to);
      if (pts.size() > 1 && dist(pts.back(), pts.front()) <= 1e-12 * (1.0 + pts.front().norm())) {
        pts.pop_back();
      }
      return ConvexBody(ConvexPolygon(std::move(pts)));
    }
    return ConvexBody(ArcGon(start, std::move(elements)));
  }
  throw Error(ErrorKind::SchemaViolation, "unknown body type '" + type + "'");
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaViolation, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::SchemaViolation, std::string("parse failure: ") + e.what());
  }
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::SchemaViolation, "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

ConvexBody load_body(const std::string& path) { return body_from_json(load_json(path)); }

json arcgon_outline_json(const ConvexBody& piece) {
  Boundary bd(piece);
  json j;
  j["type"] = "arcgon";
  j["start"] = point_json(bd.pieces().front().a);
  json els = json::array();
  for (const BoundaryPiece& p : bd.pieces()) {
    if (!p.is_arc) {
      els.push_back(json{{"kind", "seg"}, {"to", point_json(p.b)}});
      continue;
    }
    // full circles and arcs sweeping past pi split into admissible halves
    int halves = p.sweep() > kPi + 1e-12 ? 2 : 1;
    for (int h = 1; h <= halves; ++h) {
      double ang = p.ang_a + p.sweep() * (static_cast<double>(h) / halves);
      els.push_back(json{{"kind", "arc"},
                         {"center", point_json(p.center)},
                         {"radius", p.radius},
                         {"to", point_json(p.point_at_angle(ang))}});
    }
  }
  j["elements"] = std::move(els);
  return j;
}

json trange_to_json(const TRange& r) { return json::array({r.t0, r.t1}); }

json graph_to_json(const DiameterGraph& graph) {
  json j;
  j["diameter"] = graph.diameter;
  j["witness"] = chord_json(graph.witness);
  json classes = json::array();
  for (const VertexClass& c : graph.classes) {
    json cj;
    if (c.is_arc()) {
      cj["kind"] = "arc";
      cj["t_range"] = trange_to_json(c.range);
      cj["full"] = c.range.full;
      cj["closed"] = c.closed;
    } else {
      cj["kind"] = "point";
      cj["t"] = c.t;
      cj["point"] = point_json(c.point);
    }
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  json edges = json::array();
  for (const GraphEdge& e : graph.edges) {
    json ej{{"u", e.u}, {"v", e.v}};
    ej["chord"] = e.chord ? chord_json(*e.chord) : json(nullptr);
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  j["covers_boundary"] = graph.classes_cover_boundary;
  return j;
}

json certificate_to_json(const BorsukCertificate& cert) {
  json j;
  j["alpha"] = cert.alpha;
  if (cert.alpha == 2) {
    j["chord"] = chord_json(cert.chord.value());
    j["red"] = trange_to_json(cert.coloring.value().red_arc);
    j["blue"] = trange_to_json(cert.coloring.value().blue_arc);
    return j;
  }
  json w;
  w["kind"] = witness_kind_name(cert.kind);
  switch (cert.kind) {
    case WitnessKind::OddCycle:
      w["classes"] = cert.cycle;
      break;
    case WitnessKind::EuclideanBall:
      w["center"] = point_json(cert.ball_center);
      w["radius"] = cert.ball_radius;
      break;
    case WitnessKind::ClosureContact:
      w["contact_t"] = cert.contact_t;
      w["warning"] = cert.warning;
      break;
    default:
      break;
  }
  j["witness"] = std::move(w);
  return j;
}

json partition_to_json(const Partition& partition) {
  json j;
  j["tag"] = partition.tag == PartitionTag::ChordCut ? "chord_cut" : "pal_hexagon";
  j["parent"] = body_to_json(partition.parent);
  json pieces = json::array();
  for (const ConvexBody& piece : partition.pieces) pieces.push_back(arcgon_outline_json(piece));
  j["pieces"] = std::move(pieces);
  j["piece_diameters"] = partition.piece_diameters;
  return j;
}

Partition partition_from_json(const ConvexBody& parent, const json& j) {
  Partition partition(parent);
  if (j.contains("tag") && j["tag"].is_string() && j["tag"].get<std::string>() == "pal_hexagon") {
    partition.tag = PartitionTag::PalHexagon;
  }
  for (const json& pj : array_field(j, "pieces")) {
    partition.pieces.push_back(body_from_json(pj));
    partition.piece_cuts.emplace_back();
  }
  if (j.contains("piece_diameters") && j["piece_diameters"].is_array() &&
      j["piece_diameters"].size() == partition.pieces.size()) {
    for (const json& d : j["piece_diameters"]) {
      partition.piece_diameters.push_back(d.get<double>());
    }
  } else {
    for (const ConvexBody& piece : partition.pieces) {
      partition.piece_diameters.push_back(diameter(piece).first);
    }
  }
  return partition;
}

json verification_to_json(const VerificationReport& report) {
  json j;
  j["piece_diameters"] = report.piece_diameters;
  j["max_piece_diameter"] = report.max_piece_diameter;
  j["margin"] = report.margin;
  j["area_deficit"] = report.area_deficit;
  j["max_overlap"] = report.max_overlap;
  j["convex_ok"] = report.convex_ok;
  j["pass"] = report.pass;
  return j;
}

json consistency_to_json(const ConsistencyReport& report) {
  json j;
  j["alpha"] = report.alpha;
  j["diameter"] = report.diameter;
  j["brute_diameter"] = report.brute;
  j["chord_found"] = report.chord_found;
  j["chord"] = report.oracle_chord ? chord_json(*report.oracle_chord) : json(nullptr);
  j["consistent"] = report.consistent;
  j["grid_too_coarse"] = report.grid_too_coarse;
  j["hard_failure"] = report.hard_failure;
  j["note"] = report.note;
  return j;
}

std::string body_digest(const ConvexBody& body) {
  std::string canon = body_to_json(body).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

json analysis_report(const ConvexBody& body, const AnalysisOptions& options) {
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  };

  auto t0 = clock::now();
  DiameterGraph graph = build_diameter_graph(body, options.eps_rel);
  auto t1 = clock::now();
  BorsukCertificate cert = borsuk_number(body, options.eps_rel);
  auto t2 = clock::now();
  Partition partition = cert.alpha == 2 ? two_partition(body, cert.chord.value())
                                        : three_partition(body);
  VerificationReport verification = verify_partition(body, partition, options.verify_samples);
  auto t3 = clock::now();

  json rep;
  rep["input"] = json{{"digest", body_digest(body)}, {"type", kind_string(body.kind())}};
  rep["diameter"] = graph.diameter;
  rep["witness"] = chord_json(graph.witness);
  rep["graph"] = json{{"classes", static_cast<int>(graph.classes.size())},
                      {"edges", static_cast<int>(graph.edges.size())},
                      {"bipartite", !find_odd_cycle(graph).has_value()},
                      {"separable", is_bipartite_with_separation(graph).has_value()},
                      {"covers_boundary", graph.classes_cover_boundary}};
  rep["alpha"] = cert.alpha;
  rep["certificate"] = certificate_to_json(cert);
  rep["partition"] = json{{"tag", partition.tag == PartitionTag::ChordCut ? "chord_cut"
                                                                          : "pal_hexagon"},
                          {"pieces", static_cast<int>(partition.pieces.size())},
                          {"piece_diameters", verification.piece_diameters},
                          {"margin", verification.margin},
                          {"verified", verification.pass}};
  if (options.with_oracle) {
    rep["oracle"] = consistency_to_json(cross_check(body, options.oracle));
  }
  auto t4 = clock::now();
  if (options.timings) {
    rep["timings_ms"] = json{{"graph", ms(t0, t1)},
                             {"decision", ms(t1, t2)},
                             {"partition", ms(t2, t3)},
                             {"oracle", options.with_oracle ? ms(t3, t4) : 0.0},
                             {"total", ms(t0, t4)}};
  }
  return rep;
}

}  // namespace borsuk
