// Acceptance gate: every criterion prints one PASS/FAIL line; the process
// exits nonzero when any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "borsuk/decision.hpp"
#include "borsuk/diameter.hpp"
#include "borsuk/gallery.hpp"
#include "borsuk/json_io.hpp"
#include "borsuk/oracle.hpp"
#include "borsuk/partition.hpp"

#ifdef __unix__
#include <sys/wait.h>
#endif

using namespace borsuk;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(int id, const char* label, double time_limit_s,
               const std::function<bool(std::string&)>& run) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = run(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && time_limit_s > 0.0 && secs > time_limit_s) {
    ok = false;
    detail = "over time budget";
  }
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %d: %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", id, label, secs,
              detail.empty() ? "" : "; ", detail.c_str());
  std::fflush(stdout);
}

bool expect(bool cond, std::string& detail, const std::string& msg) {
  if (!cond && detail.empty()) detail = msg;
  return cond;
}

double point_segment_dist(Point2 p, Point2 a, Point2 b) {
  Point2 ab = b - a;
  double len2 = ab.norm2();
  double t = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
  return dist(p, a + t * ab);
}

ConvexBody random_body(std::mt19937_64& rng) {
  switch (rng() % 5) {
    case 0: return ConvexBody(Disc{{double(rng() % 19) - 9.0, double(rng() % 19) - 9.0},
                                   0.25 + double(rng() % 100) / 25.0});
    case 1: return reuleaux_polygon(3 + 2 * int(rng() % 3), 0.5 + double(rng() % 40) / 10.0);
    case 2: return example_pentagon(1.0 + double(rng() % 60) / 10.0);
    case 3: return random_symmetric_polygon(4 + 2 * int(rng() % 12), rng());
    default: return random_convex_polygon(3 + int(rng() % 30), rng());
  }
}

// --- criteria ---

bool paper_truth(std::string& detail) {
  auto alpha_of = [](const ConvexBody& b) { return borsuk_number(b).alpha; };
  ConvexBody square(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  if (!expect(alpha_of(square) == 2, detail, "square alpha != 2")) return false;
  if (!expect(alpha_of(ConvexBody(Disc{{0, 0}, 1.0})) == 3, detail, "disc alpha != 3")) {
    return false;
  }
  for (int n : {3, 5, 7, 9}) {
    if (!expect(alpha_of(regular_polygon(n, 1.0)) == 3, detail,
                "odd regular " + std::to_string(n) + " alpha != 3")) {
      return false;
    }
  }
  for (int n : {4, 6, 8, 10}) {
    if (!expect(alpha_of(regular_polygon(n, 1.0)) == 2, detail,
                "even regular " + std::to_string(n) + " alpha != 2")) {
      return false;
    }
  }
  for (int n : {3, 5, 7}) {
    if (!expect(alpha_of(reuleaux_polygon(n, 1.0)) == 3, detail,
                "reuleaux " + std::to_string(n) + " alpha != 3")) {
      return false;
    }
  }
  BorsukCertificate pent = borsuk_number(example_pentagon(4.0));
  if (!expect(pent.alpha == 3, detail, "pentagon alpha != 3")) return false;
  if (!expect(pent.kind == WitnessKind::OddCycle && pent.cycle.size() == 5, detail,
              "pentagon witness is not a 5-cycle")) {
    return false;
  }
  return true;
}

bool symmetric_invariants(std::string& detail) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 4 + 2 * int(rng() % 19);  // even, 4..40
    ConvexBody body(random_symmetric_polygon(n, rng()));
    Point2 center = symmetry_center(body).value();
    DiameterGraph graph = build_diameter_graph(body);
    double tol = 1e-9 * graph.diameter;

    std::vector<int> degree(graph.classes.size(), 0);
    for (const GraphEdge& e : graph.edges) {
      ++degree[size_t(e.u)];
      if (e.v != e.u) ++degree[size_t(e.v)];
      if (!expect(e.chord.has_value() &&
                      point_segment_dist(center, e.chord->a, e.chord->b) <= tol,
                  detail, "diameter chord misses the center, trial " + std::to_string(trial))) {
        return false;
      }
    }
    for (int d : degree) {
      if (!expect(d == 1, detail, "vertex degree != 1, trial " + std::to_string(trial))) {
        return false;
      }
    }

    BorsukCertificate cert = borsuk_number(body);
    if (!expect(cert.alpha == 2, detail, "symmetric polygon alpha != 2")) return false;
    Partition part = two_partition(body, cert.chord.value());
    VerificationReport ver = verify_partition(body, part, 2500);
    if (!expect(ver.pass, detail, "two-piece verification failed, trial " +
                                      std::to_string(trial))) {
      return false;
    }
  }
  return true;
}

bool oracle_equivalence(std::string& detail) {
  std::mt19937_64 rng(42);
  OracleConfig cfg;  // samples 2048, grid 256
  int coarse = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + int(rng() % 10);  // 3..12
    ConvexBody body(random_convex_polygon(n, rng()));
    ConsistencyReport rep = cross_check(body, cfg);
    if (!expect(!rep.hard_failure, detail,
                "hard failure at trial " + std::to_string(trial))) {
      return false;
    }
    if (rep.grid_too_coarse) ++coarse;
  }
  if (coarse > 0) detail = std::to_string(coarse) + " soft grid-too-coarse reports";
  return true;
}

bool partition_quality(std::string& detail) {
  const double kThird = std::sqrt(3.0) / 2.0;
  for (const GalleryShape& item : standard_gallery()) {
    ConvexBody body = item.body;
    double d = diameter(body).first;
    BorsukCertificate cert = borsuk_number(body);
    if (cert.alpha == 3) {
      RegularHexagon hex = pal_hexagon(body);  // throws unless post-verified
      ConvexPolygon hex_poly = hex.polygon();
      Boundary bd(body);
      for (Point2 p : bd.sample(4096)) {
        if (!expect(hex_poly.contains(p, kEpsOnBoundary * d), detail,
                    item.name + ": hexagon containment failed")) {
          return false;
        }
      }
      auto ring = hex.vertex_ring();
      double side = dist(ring[0], ring[1]);
      for (int k = 1; k < 6; ++k) {
        if (!expect(std::abs(dist(ring[size_t(k)], ring[size_t((k + 1) % 6)]) - side) <=
                        1e-6 * d,
                    detail, item.name + ": hexagon side spread too large")) {
          return false;
        }
      }

      Partition part = three_partition(body);
      VerificationReport ver = verify_partition(body, part, 4096);
      if (!expect(ver.pass, detail, item.name + ": three-partition verification failed")) {
        return false;
      }
      for (double pd : ver.piece_diameters) {
        if (!expect(pd <= kThird * d + 1e-4 * d, detail,
                    item.name + ": piece exceeds (sqrt3/2)*D bound")) {
          return false;
        }
      }
    } else {
      Partition part = two_partition(body, cert.chord.value());
      for (const ConvexBody& piece : part.pieces) {
        if (!expect(diameter(piece).first <= d - 1e-6 * d, detail,
                    item.name + ": two-piece margin below 1e-6*D")) {
          return false;
        }
      }
      VerificationReport ver = verify_partition(body, part, 4096);
      if (!expect(ver.pass, detail, item.name + ": two-partition verification failed")) {
        return false;
      }
    }
  }
  return true;
}

bool exact_values(std::string& detail) {
  ConvexBody square(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  BorsukCertificate cert = borsuk_number(square);
  Partition part = two_partition(square, cert.chord.value());
  for (const ConvexBody& piece : part.pieces) {
    if (!expect(std::abs(diameter(piece).first - std::sqrt(1.25)) <= 1e-12, detail,
                "square midline piece diameter is not sqrt(1.25)")) {
      return false;
    }
  }
  for (double width : {1.0, 2.0}) {
    RegularHexagon hex{{0.3, -0.7}, width, 0.25};
    for (const ConvexPolygon& piece : hexagon_three_pieces(hex)) {
      double want = std::sqrt(3.0) / 2.0 * width;
      if (!expect(std::abs(diameter(ConvexBody(piece)).first - want) <= 1e-12, detail,
                  "hexagon piece diameter is not (sqrt3/2)*width")) {
        return false;
      }
    }
  }
  DiameterGraph pent = build_diameter_graph(ConvexBody(regular_polygon(5, 1.0)));
  return expect(pent.edges.size() == 5, detail, "regular pentagon graph edge count != 5");
}

bool similarity_invariance(std::string& detail) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  std::uniform_real_distribution<double> shift(-50.0, 50.0);
  for (int trial = 0; trial < 100; ++trial) {
    ConvexBody body = random_body(rng);
    double s = scale(rng);
    ConvexBody moved = transform_body(body, angle(rng), s, {shift(rng), shift(rng)});
    int a0 = borsuk_number(body).alpha;
    int a1 = borsuk_number(moved).alpha;
    if (!expect(a0 == a1, detail, "alpha changed under similarity, trial " +
                                      std::to_string(trial))) {
      return false;
    }
    double d0 = diameter(body).first;
    double d1 = diameter(moved).first;
    if (!expect(std::abs(d1 - s * d0) <= 1e-9 * s * d0, detail,
                "diameter does not scale linearly, trial " + std::to_string(trial))) {
      return false;
    }
  }
  return true;
}

bool determinism(std::string& detail) {
  // library-level reports
  AnalysisOptions opt;
  for (const GalleryShape& item : {standard_gallery()[0], standard_gallery()[1]}) {
    if (!expect(analysis_report(item.body, opt).dump() ==
                    analysis_report(item.body, opt).dump(),
                detail, item.name + ": reports differ between runs")) {
      return false;
    }
  }
  // oracle results for a fixed seed
  OracleConfig cfg;
  cfg.boundary_samples = 512;
  cfg.chord_grid = 64;
  ConvexBody heptagon(regular_polygon(7, 1.0));
  ConsistencyReport r1 = cross_check(heptagon, cfg);
  ConsistencyReport r2 = cross_check(heptagon, cfg);
  if (!expect(r1.brute == r2.brute && r1.chord_found == r2.chord_found, detail,
              "oracle results differ for a fixed seed")) {
    return false;
  }

  // the installed binary, when reachable
  const char* cli = std::getenv("WORKBENCH_CLI");
  if (cli == nullptr) return true;
  fs::path tmp = fs::temp_directory_path() / "borsuk_acceptance";
  fs::create_directories(tmp);
  save_json((tmp / "body.json").string(),
            body_to_json(ConvexBody(regular_polygon(6, 1.0))));
  for (int run = 1; run <= 2; ++run) {
    std::string cmd = std::string(cli) + " analyze " + (tmp / "body.json").string() +
                      " --out " + (tmp / ("rep" + std::to_string(run) + ".json")).string() +
                      " >/dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) {
      detail = "analyze invocation failed";
      return false;
    }
  }
  std::ifstream a(tmp / "rep1.json"), b(tmp / "rep2.json");
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  bool same = !sa.str().empty() && sa.str() == sb.str();
  fs::remove_all(tmp);
  return expect(same, detail, "CLI reports are not byte-identical");
}

bool performance(std::string& detail) {
  ConvexBody big(random_convex_polygon(10000, 5));
  if (!expect(big.polygon().size() > 9000, detail, "generator lost too many vertices")) {
    return false;
  }
  auto start = std::chrono::steady_clock::now();
  double d = diameter(big).first;
  DiameterGraph graph = build_diameter_graph(big);
  BorsukCertificate cert = borsuk_number(big);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!expect(d > 0.0 && graph.diameter == d && (cert.alpha == 2 || cert.alpha == 3), detail,
              "inconsistent pipeline outputs")) {
    return false;
  }
  detail = "pipeline took " + std::to_string(secs) + "s";
  return expect(secs < 1.0, detail, "pipeline exceeded 1s");
}

}  // namespace

int main() {
  criterion(1, "paper-truth alphas across the named gallery", 10.0, paper_truth);
  criterion(2, "symmetric-body chord/degree/partition invariants (500 trials)", 60.0,
            symmetric_invariants);
  criterion(3, "oracle equivalence on 200 random polygons", 300.0, oracle_equivalence);
  criterion(4, "partition quality bounds across the gallery", 0.0, partition_quality);
  criterion(5, "exact piece diameters and pentagon edge count", 0.0, exact_values);
  criterion(6, "similarity invariance of alpha and diameter", 0.0, similarity_invariance);
  criterion(7, "byte-identical reports and seeded oracle determinism", 0.0, determinism);
  criterion(8, "10k-vertex polygon pipeline under one second", 0.0, performance);

  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
