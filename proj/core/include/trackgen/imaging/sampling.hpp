#pragma once

#include "trackgen/imaging/raster.hpp"

namespace trackgen {

// Pixel centers sit at integer coordinates. A sample position (u, v) is
// inside the raster when its nearest pixel is, i.e. u in (-0.5, w - 0.5)
// after rounding half away from zero.

// Value of the nearest pixel; `fill` outside the raster.
Pixel sample_nearest(const Raster& r, double u, double v, Pixel fill = {});

// Bilinear blend of the four surrounding pixels with neighbor indices
// clamped at the border, rounded half away from zero. Positions whose
// nearest pixel is outside the raster return `fill`.
Pixel sample_bilinear(const Raster& r, double u, double v, Pixel fill = {});

enum class Interpolation { kNearest, kBilinear };

inline Pixel sample(const Raster& r, double u, double v, Interpolation mode,
                    Pixel fill = {}) {
  return mode == Interpolation::kNearest ? sample_nearest(r, u, v, fill)
                                         : sample_bilinear(r, u, v, fill);
}

}  // namespace trackgen
