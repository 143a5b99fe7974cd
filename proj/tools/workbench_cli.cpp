#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "borsuk/decision.hpp"
#include "borsuk/diameter.hpp"
#include "borsuk/gallery.hpp"
#include "borsuk/json_io.hpp"
#include "borsuk/oracle.hpp"
#include "borsuk/partition.hpp"
#include "borsuk/svg.hpp"

namespace fs = std::filesystem;
using namespace borsuk;

namespace {

// Exit codes: 2 schema violation, 3 body-invariant failure,
// 4 partition verification failure, 5 oracle hard failure.
constexpr int kExitSchema = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitVerify = 4;
constexpr int kExitOracle = 5;

int error_exit_code(const Error& e) {
  return e.kind() == ErrorKind::SchemaViolation ? kExitSchema : kExitInvariant;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    save_json(out_path, j);
  }
}

// Diameter segments for figures: finite chords plus a few representatives
// per symbolic family.
std::vector<Chord> figure_diameters(const ConvexBody& body, double eps_rel) {
  DiameterPairs pairs = diameter_pairs(body, eps_rel);
  std::vector<Chord> chords = pairs.chords;
  for (const DiameterFamily& f : pairs.families) {
    for (int k = 0; k < 5; ++k) {
      double t = f.range_a.t0 + f.range_a.length() * (k + 0.5) / 5.0;
      Point2 p = boundary_point_at(body, wrap_unit(t));
      if (f.kind == DiameterFamily::Kind::VertexArc) {
        chords.push_back({f.vertex, p});
      } else {
        chords.push_back({p, reflect_through(p, f.center)});
      }
    }
  }
  return chords;
}

std::vector<Chord> construction_lines(const ConvexBody& body, const BorsukCertificate& cert) {
  std::vector<Chord> lines;
  if (cert.alpha == 2) {
    lines.push_back(cert.chord.value());
    return lines;
  }
  RegularHexagon hex = pal_hexagon(body);
  auto ring = hex.vertex_ring();
  for (int k = 0; k < 6; ++k) lines.push_back({ring[k], ring[(k + 1) % 6]});
  for (int k = 0; k < 3; ++k) {
    Point2 m = 0.5 * (ring[2 * k] + ring[2 * k + 1]);
    lines.push_back({hex.center, m});
  }
  return lines;
}

struct CommonOpts {
  double eps{kEpsDiameterRel};
  int samples{2048};
  int grid{256};
  std::uint64_t seed{42};
  double oracle_eps{1e-3};

  OracleConfig oracle() const {
    OracleConfig cfg;
    cfg.boundary_samples = samples;
    cfg.chord_grid = grid;
    cfg.seed = seed;
    cfg.eps_rel = oracle_eps;
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--eps", opts.eps, "diameter-pair tolerance (relative)");
  cmd->add_option("--samples", opts.samples, "oracle boundary samples");
  cmd->add_option("--grid", opts.grid, "oracle chord grid size");
  cmd->add_option("--seed", opts.seed, "oracle sampling seed");
  cmd->add_option("--oracle-eps", opts.oracle_eps, "oracle piece-diameter tolerance");
}

int run_analyze(const std::string& in_path, const CommonOpts& opts, bool with_oracle,
                bool timings, const std::string& out_path, const std::string& svg_path) {
  ConvexBody body = load_body(in_path);
  AnalysisOptions options;
  options.eps_rel = opts.eps;
  options.with_oracle = with_oracle;
  options.oracle = opts.oracle();
  options.timings = timings;
  json rep = analysis_report(body, options);
  emit(rep, out_path);
  if (!svg_path.empty()) {
    BorsukCertificate cert = borsuk_number(body, opts.eps);
    Partition part = cert.alpha == 2 ? two_partition(body, cert.chord.value())
                                     : three_partition(body);
    save_svg(svg_path, render_svg(body, &part, figure_diameters(body, opts.eps),
                                  construction_lines(body, cert)));
  }
  if (with_oracle && rep["oracle"]["hard_failure"].get<bool>()) return kExitOracle;
  return 0;
}

int run_partition(const std::string& in_path, const CommonOpts& opts,
                  const std::string& out_path, const std::string& svg_path) {
  ConvexBody body = load_body(in_path);
  BorsukCertificate cert = borsuk_number(body, opts.eps);
  Partition part = cert.alpha == 2 ? two_partition(body, cert.chord.value())
                                   : three_partition(body);
  VerificationReport ver = verify_partition(body, part);
  json j = partition_to_json(part);
  j["verification"] = verification_to_json(ver);
  emit(j, out_path);
  if (!svg_path.empty()) {
    save_svg(svg_path, render_svg(body, &part, figure_diameters(body, opts.eps),
                                  construction_lines(body, cert)));
  }
  if (!ver.pass) {
    std::cerr << "partition verification failed (margin " << ver.margin << ")\n";
    return kExitVerify;
  }
  return 0;
}

int run_generate(const std::string& shape, int n, double radius, double width, double beta,
                 double gamma, double cx, double cy, std::uint64_t seed,
                 const std::string& out_path) {
  if (shape == "gallery") {
    if (out_path.empty()) {
      std::cerr << "generate gallery needs --out <directory>\n";
      return kExitInvariant;
    }
    fs::create_directories(out_path);
    for (const GalleryShape& item : standard_gallery()) {
      save_json((fs::path(out_path) / (item.name + ".json")).string(),
                body_to_json(item.body));
    }
    return 0;
  }
  std::optional<ConvexBody> body;
  if (shape == "regular") body = ConvexBody(regular_polygon(n, radius));
  if (shape == "reuleaux") body = ConvexBody(reuleaux_polygon(n, width));
  if (shape == "disc") body = ConvexBody(Disc{{cx, cy}, radius});
  if (shape == "pentagon") body = ConvexBody(example_pentagon(radius, beta, gamma));
  if (shape == "random") body = ConvexBody(random_convex_polygon(n, seed));
  if (shape == "symmetric") body = ConvexBody(random_symmetric_polygon(n, seed));
  if (!body) {
    std::cerr << "unknown shape '" << shape
              << "' (regular|reuleaux|disc|pentagon|random|symmetric|gallery)\n";
    return kExitInvariant;
  }
  emit(body_to_json(*body), out_path);
  return 0;
}

int run_oracle(const std::string& in_path, const CommonOpts& opts, const std::string& out_path) {
  ConvexBody body = load_body(in_path);
  ConsistencyReport rep = cross_check(body, opts.oracle());
  emit(consistency_to_json(rep), out_path);
  if (rep.hard_failure) {
    std::cerr << "oracle hard failure: " << rep.note << '\n';
    return kExitOracle;
  }
  return 0;
}

int run_verify(const std::string& body_path, const std::string& partition_path,
               int samples, const std::string& out_path) {
  ConvexBody body = load_body(body_path);
  Partition part = partition_from_json(body, load_json(partition_path));
  VerificationReport ver = verify_partition(body, part, samples);
  emit(verification_to_json(ver), out_path);
  if (!ver.pass) {
    std::cerr << "partition verification failed (margin " << ver.margin << ")\n";
    return kExitVerify;
  }
  return 0;
}

int run_batch(const std::string& dir, const CommonOpts& opts, bool with_oracle,
              const std::string& out_dir) {
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json" &&
        entry.path().stem().string().find(".report") == std::string::npos) {
      inputs.push_back(entry.path());
    }
  }
  std::sort(inputs.begin(), inputs.end());
  fs::path out_base = out_dir.empty() ? fs::path(dir) : fs::path(out_dir);
  fs::create_directories(out_base);

  int worst = 0;
  for (const fs::path& in : inputs) {
    std::string name = in.stem().string();
    try {
      ConvexBody body = load_body(in.string());
      AnalysisOptions options;
      options.eps_rel = opts.eps;
      options.with_oracle = with_oracle;
      options.oracle = opts.oracle();
      json rep = analysis_report(body, options);
      save_json((out_base / (name + ".report.json")).string(), rep);
      std::cout << name << ": alpha " << rep["alpha"].get<int>() << ", diameter "
                << rep["diameter"].get<double>() << '\n';
      if (with_oracle && rep["oracle"]["hard_failure"].get<bool>()) {
        worst = std::max(worst, kExitOracle);
      }
    } catch (const Error& e) {
      std::cerr << name << ": " << e.what() << '\n';
      worst = std::max(worst, error_exit_code(e));
    }
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar Borsuk partition workbench"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string in_path, out_path, svg_path, body_path, partition_path, shape, dir;
  bool with_oracle = false, timings = false;
  int gen_n = 5, verify_samples = 10000;
  double gen_radius = 1.0, gen_width = 1.0, gen_beta = 1.0 / 3.0, gen_gamma = 2.0 / 3.0;
  double gen_cx = 0.0, gen_cy = 0.0;

  auto* analyze = app.add_subcommand("analyze", "full report for one body");
  analyze->add_option("input", in_path, "body JSON file")->required();
  add_common(analyze, opts);
  analyze->add_flag("--oracle", with_oracle, "include the oracle cross-check");
  analyze->add_flag("--timings", timings, "include timing fields (non-reproducible)");
  analyze->add_option("--out", out_path, "report path (default stdout)");
  analyze->add_option("--svg", svg_path, "also draw the figure");

  auto* partition = app.add_subcommand("partition", "build and verify the partition");
  partition->add_option("input", in_path, "body JSON file")->required();
  add_common(partition, opts);
  partition->add_option("--out", out_path, "partition JSON path (default stdout)");
  partition->add_option("--svg", svg_path, "figure path");

  auto* generate = app.add_subcommand("generate", "emit gallery bodies as JSON");
  generate->add_option("shape", shape,
                       "regular|reuleaux|disc|pentagon|random|symmetric|gallery")
      ->required();
  generate->add_option("--n", gen_n, "vertex count");
  generate->add_option("--radius", gen_radius, "circumradius / disc radius");
  generate->add_option("--width", gen_width, "constant width");
  generate->add_option("--beta", gen_beta, "pentagon arc parameter");
  generate->add_option("--gamma", gen_gamma, "pentagon arc parameter");
  generate->add_option("--cx", gen_cx, "disc center x");
  generate->add_option("--cy", gen_cy, "disc center y");
  generate->add_option("--seed", opts.seed, "random generator seed");
  generate->add_option("--out", out_path, "output file (directory for 'gallery')");

  auto* oracle = app.add_subcommand("oracle", "brute-force cross-check");
  oracle->add_option("input", in_path, "body JSON file")->required();
  add_common(oracle, opts);
  oracle->add_option("--out", out_path, "report path (default stdout)");

  auto* verify = app.add_subcommand("verify", "verify a stored partition");
  verify->add_option("body", body_path, "body JSON file")->required();
  verify->add_option("partition", partition_path, "partition JSON file")->required();
  verify->add_option("--samples", verify_samples, "boundary samples per piece");
  verify->add_option("--out", out_path, "report path (default stdout)");

  auto* batch = app.add_subcommand("batch", "analyze every body JSON in a directory");
  batch->add_option("dir", dir, "input directory")->required();
  add_common(batch, opts);
  batch->add_flag("--oracle", with_oracle, "include the oracle cross-check");
  batch->add_option("--out", out_path, "report directory (default: input directory)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(in_path, opts, with_oracle, timings, out_path, svg_path);
    if (*partition) return run_partition(in_path, opts, out_path, svg_path);
    if (*generate) {
      return run_generate(shape, gen_n, gen_radius, gen_width, gen_beta, gen_gamma, gen_cx,
                          gen_cy, opts.seed, out_path);
    }
    if (*oracle) return run_oracle(in_path, opts, out_path);
    if (*verify) return run_verify(body_path, partition_path, verify_samples, out_path);
    if (*batch) return run_batch(dir, opts, with_oracle, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return error_exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return 0;
}
