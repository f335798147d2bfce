#pragma once

#include <filesystem>

#include "trackgen/bev/homography.hpp"
#include "trackgen/dataset/manifest.hpp"

namespace trackgen {

struct BevConversion {
  Homography homography;  // first-person pixels to bird's-eye pixels
  int out_width = 320;
  int out_height = 256;
};

// Warps every record (raw bilinear, annotation ids nearest with fill 0) and
// writes them below `out_dir` under the same relative paths. Returns the new
// manifest, relative to `out_dir`, with every record tagged `bird`. Output
// dimensions must be multiples of 64.
DatasetManifest convert_dataset_to_bev(const DatasetManifest& manifest,
                                       const std::filesystem::path& in_dir,
                                       const BevConversion& conversion,
                                       const std::filesystem::path& out_dir);

}  // namespace trackgen
