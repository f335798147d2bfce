#include "polygon_fill.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace trackgen::detail {

void fill_polygon(std::span<const Vec2> vertices, int width, int height,
                  const std::function<void(int, int)>& plot) {
  if (vertices.size() < 3) return;
  double min_y = vertices[0].y;
  double max_y = vertices[0].y;
  for (const auto& v : vertices) {
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  const int y_begin = std::max(0, static_cast<int>(std::ceil(min_y)));
  const int y_end = std::min(height - 1, static_cast<int>(std::ceil(max_y)) - 1);

  std::vector<double> xs;
  for (int y = y_begin; y <= y_end; ++y) {
    const double yc = y;
    xs.clear();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const Vec2 a = vertices[i];
      const Vec2 b = vertices[(i + 1) % vertices.size()];
      // Half-open in y: an edge covers [min, max).
      const bool crosses = (a.y <= yc && yc < b.y) || (b.y <= yc && yc < a.y);
      if (!crosses) continue;
      xs.push_back(a.x + (yc - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      const int x_begin = std::max(0, static_cast<int>(std::ceil(xs[k])));
      const int x_end =
          std::min(width - 1, static_cast<int>(std::ceil(xs[k + 1])) - 1);
      for (int x = x_begin; x <= x_end; ++x) plot(x, y);
    }
  }
}

}  // namespace trackgen::detail
