#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "borsuk/geometry.hpp"

namespace borsuk {

struct OracleConfig {
  int boundary_samples{2048};
  int chord_grid{256};
  std::uint64_t seed{42};
  // a piece counts as strictly smaller when its sampled diameter is below
  // D * (1 - eps_rel); must stay well above the sampling resolution
  double eps_rel{1e-3};
};

struct ConsistencyReport {
  int alpha{0};
  double diameter{0.0};        // analytic
  double brute{0.0};           // sampled lower bound
  bool chord_found{false};
  std::optional<Chord> oracle_chord;
  bool consistent{true};
  bool grid_too_coarse{false};  // soft: alpha = 2 but no grid chord worked
  bool hard_failure{false};     // alpha = 3 yet a two-cut passed the oracle
  std::string note;
};

// Max pairwise distance over stratified + jittered boundary samples and all
// exact corner points; never exceeds the true diameter.
std::pair<double, Chord> brute_diameter(const ConvexBody& body, const OracleConfig& config);

// Search all chords between pairs of grid boundary points, most balanced
// splits first; the first chord whose two pieces both have sampled diameter
// below D * (1 - eps_rel) wins.
std::optional<Chord> brute_alpha2(const ConvexBody& body, const OracleConfig& config);

// Decision vs. oracle: alpha = 2 should come with a grid chord (else the
// grid was too coarse: soft); alpha = 3 with a passing chord is a hard
// failure of the decision procedure.
ConsistencyReport cross_check(const ConvexBody& body, const OracleConfig& config);

}  // namespace borsuk
