#pragma once

#include "trackgen/bev/homography.hpp"
#include "trackgen/imaging/raster.hpp"
#include "trackgen/imaging/sampling.hpp"

namespace trackgen {

// Inverse-mapping warp: output pixel q takes the source sample at
// H^-1 * q. `h` maps source pixels to output pixels. Positions outside the
// source, or mapping to infinity, take `fill`.
Raster warp_image(const Raster& src, const Homography& h, int out_width,
                  int out_height, Interpolation mode, Pixel fill = {});

}  // namespace trackgen
