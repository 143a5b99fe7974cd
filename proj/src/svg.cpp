#include "borsuk/svg.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace borsuk {

namespace {

// y is negated throughout so the figure renders with the math orientation.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string coords(Point2 p) { return num(p.x) + " " + num(-p.y); }

// Closed boundary path; ccw arcs flip to sweep flag 0 under the y mirror.
std::string body_path(const ConvexBody& body) {
  Boundary bd(body);
  std::string d = "M " + coords(bd.pieces().front().a);
  for (const BoundaryPiece& p : bd.pieces()) {
    if (!p.is_arc) {
      d += " L " + coords(p.b);
      continue;
    }
    int halves = p.sweep() > kPi - 1e-9 ? 2 : 1;  // arc commands need sweep < pi
    for (int h = 1; h <= halves; ++h) {
      double ang = p.ang_a + p.sweep() * (static_cast<double>(h) / halves);
      d += " A " + num(p.radius) + " " + num(p.radius) + " 0 0 0 " +
           coords(p.point_at_angle(ang));
    }
  }
  d += " Z";
  return d;
}

}  // namespace

std::string render_svg(const ConvexBody& body, const Partition* partition,
                       const std::vector<Chord>& diameter_segments,
                       const std::vector<Chord>& construction_lines) {
  Point2 lo, hi;
  body_bbox(body, lo, hi);
  double pad = 0.05 * std::max(hi.x - lo.x, hi.y - lo.y);
  double sw = 0.006 * body_scale(body);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << num(lo.x - pad) << " " << num(-(hi.y + pad)) << " "
      << num(hi.x - lo.x + 2 * pad) << " " << num(hi.y - lo.y + 2 * pad) << "\">\n";

  static const char* kPieceFills[3] = {"#7fc97f", "#beaed4", "#fdc086"};
  if (partition) {
    int i = 0;
    for (const ConvexBody& piece : partition->pieces) {
      out << "  <path d=\"" << body_path(piece) << "\" fill=\"" << kPieceFills[i % 3]
          << "\" fill-opacity=\"0.75\" stroke=\"none\"/>\n";
      ++i;
    }
  }

  out << "  <path d=\"" << body_path(body) << "\" fill=\"none\" stroke=\"black\""
      << " stroke-width=\"" << num(sw) << "\"/>\n";

  for (const Chord& c : construction_lines) {
    out << "  <line x1=\"" << num(c.a.x) << "\" y1=\"" << num(-c.a.y) << "\" x2=\""
        << num(c.b.x) << "\" y2=\"" << num(-c.b.y) << "\" stroke=\"#1f78b4\""
        << " stroke-width=\"" << num(0.75 * sw) << "\" stroke-dasharray=\""
        << num(2.5 * sw) << " " << num(2.5 * sw) << "\"/>\n";
  }

  for (const Chord& c : diameter_segments) {
    out << "  <line x1=\"" << num(c.a.x) << "\" y1=\"" << num(-c.a.y) << "\" x2=\""
        << num(c.b.x) << "\" y2=\"" << num(-c.b.y) << "\" stroke=\"red\""
        << " stroke-width=\"" << num(0.6 * sw) << "\"/>\n";
  }

  out << "</svg>\n";
  return out.str();
}

void save_svg(const std::string& path, const std::string& svg) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::SchemaViolation, "cannot write '" + path + "'");
  out << svg;
}

}  // namespace borsuk
