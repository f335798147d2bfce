#pragma once

#include <functional>
#include <span>

#include "trackgen/road/geometry.hpp"

namespace trackgen::detail {

// Calls `plot(x, y)` for every pixel whose center lies inside the polygon
// (even-odd rule). Vertices are in pixel coordinates. Edges use a half-open
// convention (top-left rule), so polygons sharing an edge never both cover
// a pixel and never leave a gap between them.
void fill_polygon(std::span<const Vec2> vertices, int width, int height,
                  const std::function<void(int, int)>& plot);

}  // namespace trackgen::detail
