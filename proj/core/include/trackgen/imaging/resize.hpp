#pragma once

#include "trackgen/imaging/raster.hpp"
#include "trackgen/imaging/sampling.hpp"

namespace trackgen {

// Rescales to the requested size with pixel-center alignment: output pixel
// i samples the source at (i + 0.5) * src / dst - 0.5.
Raster resize(const Raster& src, int width, int height, Interpolation mode);

// Copies the rectangle [left, left+width) x [top, top+height). The
// rectangle must lie inside `src`.
Raster crop(const Raster& src, int left, int top, int width, int height);

}  // namespace trackgen
