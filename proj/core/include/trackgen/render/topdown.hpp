#pragma once

#include "trackgen/imaging/raster.hpp"
#include "trackgen/road/geometry.hpp"
#include "trackgen/road/layout.hpp"

namespace trackgen {

struct Palette {
  Rgb background{110, 110, 110};  // floor around the track
  Rgb surface{40, 40, 40};        // road and parking surface
  Rgb marking{255, 255, 255};
  Rgb obstacle{170, 60, 60};      // occupied parking footprint
};

struct RenderOptions {
  int max_width = 8192;
  int max_height = 8192;
  double margin = 0.25;  // m of background around the track
  Palette palette;
};

// Paired top-down rasters of one layout. All three rasters share dimensions
// and world_origin is the world position of the center of pixel (0, 0);
// x grows to the right, world y grows up (image rows grow down).
struct TopDownPair {
  Raster raw;               // RGB photometric image
  Raster annotation_color;  // RGB class colors
  Raster annotation_id;     // 1-channel class ids
  double meters_per_pixel = 0.005;
  Vec2 world_origin;
  Palette palette;
  Pixel unlabeled_color{};  // color of class 0 in annotation_color

  // Continuous pixel coordinates of a world point.
  Vec2 world_to_pixel(Vec2 world) const {
    return {(world.x - world_origin.x) / meters_per_pixel,
            (world_origin.y - world.y) / meters_per_pixel};
  }
  Vec2 pixel_to_world(Vec2 pixel) const {
    return {world_origin.x + pixel.x * meters_per_pixel,
            world_origin.y - pixel.y * meters_per_pixel};
  }
};

// Deterministic rasterization without anti-aliasing. Throws InvalidInput for
// invalid layouts or when the track exceeds the configured raster size.
TopDownPair render_topdown(const RouteLayout& layout,
                           const RenderOptions& options = {});

}  // namespace trackgen
