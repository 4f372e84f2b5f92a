#pragma once

#include "trirank/router.hpp"
#include "trirank/triangulation.hpp"

#include <string>

namespace trirank {

/// SVG 1.1 picture of the instance: edges as segments, nodes as circles,
/// anchors enlarged and labeled A1/A2/A3. Stored planar positions are used
/// when present; otherwise each node is placed barycentrically from its
/// normalized rank triple on a fixed equilateral triangle. An optional
/// route is overdrawn as a polyline with arrowheads.
std::string render_svg(const Triangulation& g, const RouteTrace* route = nullptr);

} // namespace trirank
