#include "borsuk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "borsuk/decision.hpp"
#include "borsuk/diameter.hpp"

namespace borsuk {

namespace {

void validate(const OracleConfig& config) {
  if (config.boundary_samples < 16) {
    throw Error(ErrorKind::InvalidParameters, "oracle needs at least 16 boundary samples");
  }
  if (config.chord_grid < 8) {
    throw Error(ErrorKind::InvalidParameters, "oracle needs a chord grid of at least 8");
  }
  if (!(config.eps_rel > 0.0) || !(config.eps_rel < 0.5)) {
    throw Error(ErrorKind::InvalidParameters, "oracle eps_rel must lie in (0, 0.5)");
  }
}

std::vector<Point2> sample_with_corners(const ConvexBody& body, int n, std::uint64_t seed) {
  Boundary bd(body);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> jitter(static_cast<size_t>(n));
  for (double& j : jitter) j = u(rng);
  std::vector<Point2> pts = bd.sample(n, &jitter);
  for (Point2 p : bd.corner_points()) pts.push_back(p);
  return pts;
}

std::pair<double, Chord> max_pair(const std::vector<Point2>& pts) {
  double best2 = 0.0;
  Chord witness{pts.front(), pts.front()};
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      double d2 = dist2(pts[i], pts[j]);
      if (d2 > best2) {
        best2 = d2;
        witness = {pts[i], pts[j]};
      }
    }
  }
  return {std::sqrt(best2), witness};
}

}  // namespace

std::pair<double, Chord> brute_diameter(const ConvexBody& body, const OracleConfig& config) {
  validate(config);
  return max_pair(sample_with_corners(body, config.boundary_samples, config.seed));
}

std::optional<Chord> brute_alpha2(const ConvexBody& body, const OracleConfig& config) {
  validate(config);
  const int grid = config.chord_grid;
  Boundary bd(body);
  std::vector<Point2> gp = bd.sample(grid);

  auto full = sample_with_corners(body, config.boundary_samples, config.seed);
  double big_d = max_pair(full).first;
  double cutoff = big_d * (1.0 - config.eps_rel);
  double cutoff2 = cutoff * cutoff;

  // near-diameter sample pairs; any workable chord must separate all of them
  std::vector<std::pair<Point2, Point2>> hot;
  for (size_t i = 0; i < full.size() && hot.size() < 4096; ++i) {
    for (size_t j = i + 1; j < full.size() && hot.size() < 4096; ++j) {
      if (dist2(full[i], full[j]) >= cutoff2) hot.emplace_back(full[i], full[j]);
    }
  }
  std::vector<std::pair<Point2, Point2>> prune;
  size_t stride = std::max<size_t>(1, hot.size() / 64);
  for (size_t k = 0; k < hot.size(); k += stride) prune.push_back(hot[k]);

  // candidate chords, most balanced circular splits first
  std::vector<std::pair<int, int>> order;
  order.reserve(static_cast<size_t>(grid) * (grid - 1) / 2);
  for (int i = 0; i < grid; ++i) {
    for (int j = i + 1; j < grid; ++j) order.push_back({i, j});
  }
  auto balance = [grid](const std::pair<int, int>& c) {
    int d = c.second - c.first;
    d = std::min(d, grid - d);
    return std::abs(2 * d - grid);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](const auto& a, const auto& b) { return balance(a) < balance(b); });

  int piece_n = std::max(64, config.boundary_samples / 8);
  for (auto [i, j] : order) {
    Point2 a = gp[static_cast<size_t>(i)], b = gp[static_cast<size_t>(j)];
    double len = dist(a, b);
    if (len < 1e-12 * big_d) continue;
    Point2 n = ((b - a) * (1.0 / len)).perp();
    double off = n.dot(a);
    bool separates = true;
    for (const auto& [p, q] : prune) {
      double sp = n.dot(p) - off, sq = n.dot(q) - off;
      if ((sp > 0.0) == (sq > 0.0)) {
        separates = false;
        break;
      }
    }
    if (!separates) continue;

    bool ok = true;
    for (Point2 normal : {n, -n}) {
      auto piece = try_clip_halfplane(body, HalfPlane::through(a, normal));
      if (!piece) {
        ok = false;  // the whole body sits on the other side: nothing was cut
        break;
      }
      double est = max_pair(sample_with_corners(*piece, piece_n, config.seed)).first;
      if (est >= cutoff) {
        ok = false;
        break;
      }
    }
    if (ok) return Chord{a, b};
  }
  return std::nullopt;
}

ConsistencyReport cross_check(const ConvexBody& body, const OracleConfig& config) {
  validate(config);
  ConsistencyReport report;
  report.diameter = diameter(body).first;
  report.brute = brute_diameter(body, config).first;
  report.alpha = borsuk_number(body).alpha;
  report.oracle_chord = brute_alpha2(body, config);
  report.chord_found = report.oracle_chord.has_value();

  report.consistent = (report.alpha == 2) == report.chord_found;
  report.grid_too_coarse = report.alpha == 2 && !report.chord_found;
  report.hard_failure = report.alpha == 3 && report.chord_found;
  if (report.hard_failure) {
    report.note = "decision says 3 but the oracle found a two-cut";
  } else if (report.grid_too_coarse) {
    report.note = "decision says 2 but no grid chord passed; grid too coarse";
  } else {
    report.note = "decision and oracle agree";
  }
  return report;
}

}  // namespace borsuk
