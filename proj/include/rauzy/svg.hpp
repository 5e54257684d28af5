#pragma once

#include <string>
#include <vector>

#include "rauzy/geometry.hpp"

namespace rauzy {

// Fill colours follow the position of the face type in `order` (lexicographic O_k).
struct SvgCanvas {
  std::vector<WedgeType> order;
  double width = 800;  // pixels; height follows the aspect ratio of the content
  double margin = 0.02;
  double stroke = 0.6;  // pixels
  Vec2 shift;           // added to every polygon before drawing
};

std::string palette_colour(std::size_t index);

std::string faces_svg(const std::vector<FacePolygon>& faces, const SvgCanvas& canvas);
// Points drawn as squares of side `dot` (K_c units), coloured per group.
std::string clouds_svg(const std::vector<std::vector<Vec2>>& groups, double dot, const SvgCanvas& canvas);

void write_text(const std::string& path, const std::string& content);

}  // namespace rauzy
