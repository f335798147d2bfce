#pragma once

#include "trackgen/imaging/raster.hpp"
#include "trackgen/imaging/sampling.hpp"
#include "trackgen/road/class_map.hpp"

namespace trackgen {

enum class ColorPolicy {
  kStrict,   // every color must be in the map
  kNearest,  // unknown colors take the closest class color, ties to lower id
};

// RGB annotation to 1-channel class ids. Under kStrict, unknown colors raise
// InvalidInput listing up to 10 of them with pixel counts.
Raster color_to_id(const Raster& annotation_color, const ClassMap& map,
                   ColorPolicy policy);

inline Raster id_to_color(const Raster& ids, const ClassMap& map) {
  return colorize(ids, map);
}

struct RoiRect {
  int left = 0;
  int top = 0;
  int width = 0;
  int height = 0;
};

// Cropped copy; throws InvalidInput unless the rect lies inside `r` with
// positive size.
Raster apply_roi(const Raster& r, const RoiRect& roi);

// Downscales each axis to the largest multiple of 64 not above it. Inputs
// already divisible by 64 on both axes are returned unchanged. Throws
// InvalidInput when either side is below 64.
Raster fit_dims_64(const Raster& r, Interpolation mode);

}  // namespace trackgen
