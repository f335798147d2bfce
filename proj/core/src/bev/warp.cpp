#include "trackgen/bev/warp.hpp"

#include <cmath>

namespace trackgen {

Raster warp_image(const Raster& src, const Homography& h, int out_width,
                  int out_height, Interpolation mode, Pixel fill) {
  const auto m = invert(h).matrix();
  Raster out(out_width, out_height, src.channels());
  for (int y = 0; y < out_height; ++y) {
    for (int x = 0; x < out_width; ++x) {
      const double w = m[6] * x + m[7] * y + m[8];
      if (!(std::abs(w) > 1e-12)) {
        out.set_pixel(x, y, fill);
        continue;
      }
      const double u = (m[0] * x + m[1] * y + m[2]) / w;
      const double v = (m[3] * x + m[4] * y + m[5]) / w;
      out.set_pixel(x, y, sample(src, u, v, mode, fill));
    }
  }
  return out;
}

}  // namespace trackgen
