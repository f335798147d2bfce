#include "trackgen/imaging/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace trackgen {

Pixel sample_nearest(const Raster& r, double u, double v, Pixel fill) {
  const double ru = std::round(u);
  const double rv = std::round(v);
  if (!(ru >= 0.0 && rv >= 0.0 && ru < r.width() && rv < r.height())) {
    return fill;
  }
  return r.pixel(static_cast<int>(ru), static_cast<int>(rv));
}

Pixel sample_bilinear(const Raster& r, double u, double v, Pixel fill) {
  const double ru = std::round(u);
  const double rv = std::round(v);
  if (!(ru >= 0.0 && rv >= 0.0 && ru < r.width() && rv < r.height())) {
    return fill;
  }
  const double fu = std::floor(u);
  const double fv = std::floor(v);
  const double tx = u - fu;
  const double ty = v - fv;
  const int ix = static_cast<int>(fu);
  const int iy = static_cast<int>(fv);
  const int xa = std::clamp(ix, 0, r.width() - 1);
  const int xb = std::clamp(ix + 1, 0, r.width() - 1);
  const int ya = std::clamp(iy, 0, r.height() - 1);
  const int yb = std::clamp(iy + 1, 0, r.height() - 1);

  Pixel out{};
  for (int c = 0; c < r.channels(); ++c) {
    const double top = (1.0 - tx) * r.at(xa, ya, c) + tx * r.at(xb, ya, c);
    const double bottom = (1.0 - tx) * r.at(xa, yb, c) + tx * r.at(xb, yb, c);
    const double value = (1.0 - ty) * top + ty * bottom;
    out[static_cast<std::size_t>(c)] =
        static_cast<std::uint8_t>(std::clamp(std::round(value), 0.0, 255.0));
  }
  return out;
}

}  // namespace trackgen
