#pragma once

#include <string>
#include <vector>

#include "rainbow/colored_set.hpp"

namespace rainbow {

struct SvgOptions {
  int width = 800;         // canvas width in px; height follows the aspect ratio
  double point_radius = 3.0;
  bool label_points = false;
  // Zoom to the bounding box of one color class (useful for tight clusters);
  // 0 = whole set.
  ColorId zoom_color = 0;
};

/// Deterministic standalone SVG: fixed palette by color id, optional witness
/// overlays (filled translucent polygons in vertex order). Coordinates are
/// converted to decimal only for layout; nothing feeds back into geometry.
std::string render_svg(const ColoredPointSet& s,
                       const std::vector<PolygonWitness>& highlights = {},
                       const SvgOptions& opt = {});

}  // namespace rainbow
