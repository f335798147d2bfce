#include "trackgen/dataset/bev_convert.hpp"

#include <fmt/format.h>

#include "trackgen/bev/warp.hpp"
#include "trackgen/error.hpp"
#include "trackgen/imaging/netpbm.hpp"
#include "trackgen/util/files.hpp"

namespace trackgen {

DatasetManifest convert_dataset_to_bev(const DatasetManifest& manifest,
                                       const std::filesystem::path& in_dir,
                                       const BevConversion& conversion,
                                       const std::filesystem::path& out_dir) {
  const int w = conversion.out_width;
  const int h = conversion.out_height;
  if (w < 64 || h < 64 || w % 64 != 0 || h % 64 != 0) {
    throw InvalidInput(fmt::format(
        "bird's-eye output {}x{} must be positive multiples of 64", w, h));
  }
  DatasetManifest out = manifest;
  for (auto& rec : out.records) {
    if (std::filesystem::path(rec.raw_path).is_absolute() ||
        std::filesystem::path(rec.ann_path).is_absolute()) {
      throw InvalidInput(fmt::format(
          "{}: conversion needs paths relative to the manifest", rec.raw_path));
    }
    const Raster raw = read_raster_file(util::resolve(in_dir, rec.raw_path));
    const Raster ann = read_raster_file(util::resolve(in_dir, rec.ann_path));
    if (ann.channels() != 1) {
      throw InvalidInput(fmt::format("{}: annotation is not a class-id image",
                                     rec.ann_path));
    }
    write_raster_file(out_dir / rec.raw_path,
                      warp_image(raw, conversion.homography, w, h,
                                 Interpolation::kBilinear));
    write_raster_file(out_dir / rec.ann_path,
                      warp_image(ann, conversion.homography, w, h,
                                 Interpolation::kNearest));
    rec.perspective = Perspective::kBird;
  }
  return out;
}

}  // namespace trackgen
