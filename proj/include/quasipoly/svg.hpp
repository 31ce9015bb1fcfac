#pragma once

// Static SVG pictures: a faint model-set patch, a bold polygon and one line
// per U-direction through a vertex, with a legend.

#include "quasipoly/cyclo.hpp"

#include <string>
#include <vector>

namespace quasipoly {

struct SvgScene {
  std::vector<PlanarPoint> patch;
  std::vector<PlanarPoint> polygon;   // drawn closed, in order
  std::vector<double> direction_angles;
  std::size_t anchor_vertex = 0;      // the U-lines pass through this vertex
  std::string title;
  int size_px = 800;
};

std::string render_svg(const SvgScene& scene);

}  // namespace quasipoly
