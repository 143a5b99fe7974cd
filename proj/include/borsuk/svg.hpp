#pragma once

#include <string>
#include <vector>

#include "borsuk/geometry.hpp"
#include "borsuk/partition.hpp"

namespace borsuk {

// SVG 1.1 figure: body outline in black, partition pieces in three fixed
// fills, diameter segments in red, construction lines (splitting chord or
// Pál hexagon) dashed blue. The viewBox pads the body bounding box by 5%.
std::string render_svg(const ConvexBody& body, const Partition* partition,
                       const std::vector<Chord>& diameter_segments,
                       const std::vector<Chord>& construction_lines);

void save_svg(const std::string& path, const std::string& svg);

}  // namespace borsuk
