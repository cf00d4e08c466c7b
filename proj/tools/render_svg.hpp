#pragma once

#include <string>

#include "okounkov/polytope.hpp"

namespace okounkov::tools {

/// Static SVG of a polytope in R^1 or R^2: 400x400 canvas, 40px margin, one uniform scale fitting the
/// bounding box of the vertices and the origin, y axis pointing up. Vertices are labelled with exact
/// coordinates. Throws InvalidInput for ambient dimension above 2.
std::string render_svg(const Polytope& p);

void write_svg(const Polytope& p, const std::string& path);

}  // namespace okounkov::tools
