#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "borsuk/geometry.hpp"

namespace borsuk {

struct GalleryShape {
  std::string name;
  std::map<std::string, double> parameters;
  ConvexBody body;
  std::optional<int> expected_alpha;
};

// Vertices at angles 2*pi*k/n on the circumcircle.
ConvexPolygon regular_polygon(int n, double circumradius);

// Constant-width body: n arcs of radius `width` centered at the opposite
// vertices of a regular n-gon whose long diagonal equals `width`. n odd.
ArcGon reuleaux_polygon(int n, double width);

// Pentagon hull of {o, a, b, c, d}: o=(0,0), a=(r,0); b on the lens arc of
// the circle about a, c on the lens arc of the circle about o (both upper
// half), d the lower intersection of unit-r circles about b and c. The five
// chords o-a, a-b, b-d, c-d, o-c all have length exactly r; every other
// vertex pair is strictly shorter. beta/gamma in (0,1) place b and c along
// their arcs (0 and 1 are the degenerate tips).
ConvexPolygon example_pentagon(double r, double beta = 1.0 / 3.0, double gamma = 2.0 / 3.0);

// Random edge vectors (zero sum) sorted by angle and accumulated: convex by
// construction.
ConvexPolygon random_convex_polygon(int n, std::uint64_t seed);

// Zonogon: n/2 random generators and their negations; centrally symmetric
// by construction. n even.
ConvexPolygon random_symmetric_polygon(int n, std::uint64_t seed);

// Every named body with its ground-truth Borsuk number.
std::vector<GalleryShape> standard_gallery();

}  // namespace borsuk
