#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

#include "borsuk/decision.hpp"
#include "borsuk/diameter.hpp"
#include "borsuk/gallery.hpp"
#include "borsuk/json_io.hpp"
#include "borsuk/oracle.hpp"
#include "borsuk/partition.hpp"
#include "borsuk/svg.hpp"

namespace py = pybind11;
using namespace borsuk;

namespace {

std::pair<std::pair<double, double>, std::pair<double, double>> chord_tuple(const Chord& c) {
  return {{c.a.x, c.a.y}, {c.b.x, c.b.y}};
}

OracleConfig make_config(int samples, int grid, std::uint64_t seed, double eps_rel) {
  OracleConfig cfg;
  cfg.boundary_samples = samples;
  cfg.chord_grid = grid;
  cfg.seed = seed;
  cfg.eps_rel = eps_rel;
  return cfg;
}

Partition build_partition(const ConvexBody& body, double eps_rel) {
  BorsukCertificate cert = borsuk_number(body, eps_rel);
  return cert.alpha == 2 ? two_partition(body, cert.chord.value()) : three_partition(body);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "diameter graphs, Borsuk numbers and partitions of planar convex bodies";

  py::register_exception<Error>(m, "GeometryError");

  py::class_<ConvexBody>(m, "Body")
      .def("__repr__",
           [](const ConvexBody& b) {
             return "<Body " + std::string(b.is_polygon() ? "polygon"
                                           : b.is_disc()  ? "disc"
                                                          : "arcgon") +
                    " diameter=" + std::to_string(diameter(b).first) + ">";
           })
      .def_property_readonly("kind",
                             [](const ConvexBody& b) {
                               return b.is_polygon() ? "polygon"
                                      : b.is_disc()  ? "disc"
                                                     : "arcgon";
                             })
      .def_property_readonly("area", &body_area)
      .def_property_readonly("perimeter", &body_perimeter)
      .def("contains",
           [](const ConvexBody& b, double x, double y, double eps) {
             return body_contains(b, {x, y}, eps);
           },
           py::arg("x"), py::arg("y"), py::arg("eps") = 1e-9)
      .def("to_json", [](const ConvexBody& b) { return body_to_json(b).dump(); });

  m.def("polygon",
        [](const std::vector<std::pair<double, double>>& pts) {
          std::vector<Point2> v;
          for (auto [x, y] : pts) v.push_back({x, y});
          return ConvexBody(ConvexPolygon(std::move(v)));
        },
        py::arg("vertices"), "strictly convex polygon from a vertex list");
  m.def("disc",
        [](double cx, double cy, double r) { return ConvexBody(Disc{{cx, cy}, r}); },
        py::arg("cx"), py::arg("cy"), py::arg("radius"));
  m.def("regular_polygon",
        [](int n, double r) { return ConvexBody(regular_polygon(n, r)); }, py::arg("n"),
        py::arg("circumradius") = 1.0);
  m.def("reuleaux_polygon",
        [](int n, double w) { return ConvexBody(reuleaux_polygon(n, w)); }, py::arg("n"),
        py::arg("width") = 1.0);
  m.def("example_pentagon",
        [](double r, double beta, double gamma) {
          return ConvexBody(example_pentagon(r, beta, gamma));
        },
        py::arg("r") = 4.0, py::arg("beta") = 1.0 / 3.0, py::arg("gamma") = 2.0 / 3.0);
  m.def("random_polygon",
        [](int n, std::uint64_t seed) { return ConvexBody(random_convex_polygon(n, seed)); },
        py::arg("n"), py::arg("seed"));
  m.def("random_symmetric_polygon",
        [](int n, std::uint64_t seed) {
          return ConvexBody(random_symmetric_polygon(n, seed));
        },
        py::arg("n"), py::arg("seed"));
  m.def("body_from_json", [](const std::string& s) { return body_from_json(json::parse(s)); },
        py::arg("text"));

  m.def("diameter",
        [](const ConvexBody& b) {
          auto [d, chord] = diameter(b);
          return std::make_pair(d, chord_tuple(chord));
        },
        "diameter and one realizing chord");
  m.def("borsuk_number",
        [](const ConvexBody& b, double eps_rel) { return borsuk_number(b, eps_rel).alpha; },
        py::arg("body"), py::arg("eps_rel") = kEpsDiameterRel);
  m.def("certificate",
        [](const ConvexBody& b, double eps_rel) {
          return certificate_to_json(borsuk_number(b, eps_rel)).dump();
        },
        py::arg("body"), py::arg("eps_rel") = kEpsDiameterRel,
        "decision certificate as a JSON string");
  m.def("diameter_graph",
        [](const ConvexBody& b, double eps_rel) {
          return graph_to_json(build_diameter_graph(b, eps_rel)).dump();
        },
        py::arg("body"), py::arg("eps_rel") = kEpsDiameterRel,
        "diameter graph as a JSON string");
  m.def("analyze",
        [](const ConvexBody& b, double eps_rel, bool oracle, int samples, int grid,
           std::uint64_t seed, double oracle_eps) {
          AnalysisOptions opt;
          opt.eps_rel = eps_rel;
          opt.with_oracle = oracle;
          opt.oracle = make_config(samples, grid, seed, oracle_eps);
          return analysis_report(b, opt).dump();
        },
        py::arg("body"), py::arg("eps_rel") = kEpsDiameterRel, py::arg("oracle") = false,
        py::arg("samples") = 2048, py::arg("grid") = 256, py::arg("seed") = 42,
        py::arg("oracle_eps") = 1e-3, "full analysis report as a JSON string");
  m.def("partition",
        [](const ConvexBody& b, double eps_rel) {
          Partition part = build_partition(b, eps_rel);
          json j = partition_to_json(part);
          j["verification"] = verification_to_json(verify_partition(b, part));
          return j.dump();
        },
        py::arg("body"), py::arg("eps_rel") = kEpsDiameterRel,
        "verified partition as a JSON string");
  m.def("verify_partition",
        [](const ConvexBody& b, const std::string& partition_json, int samples) {
          Partition part = partition_from_json(b, json::parse(partition_json));
          return verification_to_json(verify_partition(b, part, samples)).dump();
        },
        py::arg("body"), py::arg("partition_json"), py::arg("samples") = 10000);
  m.def("cross_check",
        [](const ConvexBody& b, int samples, int grid, std::uint64_t seed, double eps_rel) {
          return consistency_to_json(cross_check(b, make_config(samples, grid, seed, eps_rel)))
              .dump();
        },
        py::arg("body"), py::arg("samples") = 2048, py::arg("grid") = 256,
        py::arg("seed") = 42, py::arg("eps_rel") = 1e-3,
        "brute-force oracle consistency report as a JSON string");
  m.def("render_svg",
        [](const ConvexBody& b, bool with_partition, double eps_rel) {
          DiameterPairs pairs = diameter_pairs(b, eps_rel);
          if (!with_partition) return render_svg(b, nullptr, pairs.chords, {});
          Partition part = build_partition(b, eps_rel);
          return render_svg(b, &part, pairs.chords, {});
        },
        py::arg("body"), py::arg("with_partition") = true,
        py::arg("eps_rel") = kEpsDiameterRel, "SVG figure of the body and its partition");
}
