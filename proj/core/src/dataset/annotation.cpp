#include "trackgen/dataset/annotation.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <unordered_map>

#include "trackgen/error.hpp"
#include "trackgen/imaging/resize.hpp"

namespace trackgen {

namespace {

std::uint32_t pack(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  return (std::uint32_t{r} << 16) | (std::uint32_t{g} << 8) | b;
}

std::uint8_t nearest_class(const ClassMap& map, std::uint32_t rgb) {
  const int r = static_cast<int>(rgb >> 16), g = static_cast<int>((rgb >> 8) & 0xff),
            b = static_cast<int>(rgb & 0xff);
  const ClassEntry* best = nullptr;
  int best_d = 0;
  for (const auto& e : map.entries()) {
    const int dr = r - e.color.r, dg = g - e.color.g, db = b - e.color.b;
    const int d = dr * dr + dg * dg + db * db;
    if (!best || d < best_d || (d == best_d && e.id < best->id)) {
      best = &e;
      best_d = d;
    }
  }
  return best->id;
}

}  // namespace

Raster color_to_id(const Raster& annotation_color, const ClassMap& map,
                   ColorPolicy policy) {
  if (annotation_color.channels() != 3) {
    throw InvalidInput("color_to_id needs a 3-channel annotation image");
  }
  if (map.entries().empty()) throw InvalidInput("class map is empty");

  std::unordered_map<std::uint32_t, std::uint8_t> lut;
  for (const auto& e : map.entries()) lut.emplace(pack(e.color.r, e.color.g, e.color.b), e.id);

  Raster ids(annotation_color.width(), annotation_color.height(), 1);
  std::unordered_map<std::uint32_t, std::size_t> unknown;
  const auto src = annotation_color.data();
  auto dst = ids.data();
  for (std::size_t i = 0; i < ids.pixel_count(); ++i) {
    const std::uint32_t key = pack(src[3 * i], src[3 * i + 1], src[3 * i + 2]);
    auto it = lut.find(key);
    if (it == lut.end()) {
      if (policy == ColorPolicy::kStrict) {
        ++unknown[key];
        continue;
      }
      it = lut.emplace(key, nearest_class(map, key)).first;
    }
    dst[i] = it->second;
  }

  if (!unknown.empty()) {
    std::vector<std::pair<std::uint32_t, std::size_t>> listed(unknown.begin(),
                                                               unknown.end());
    std::sort(listed.begin(), listed.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    std::string msg = fmt::format("{} unknown annotation color(s):", listed.size());
    for (std::size_t i = 0; i < listed.size() && i < 10; ++i) {
      const auto c = listed[i].first;
      msg += fmt::format(" ({},{},{}) x{}", c >> 16, (c >> 8) & 0xff, c & 0xff,
                         listed[i].second);
      if (i + 1 < listed.size() && i < 9) msg += ',';
    }
    if (listed.size() > 10) msg += " ...";
    throw InvalidInput(msg);
  }
  return ids;
}

Raster apply_roi(const Raster& r, const RoiRect& roi) {
  if (roi.width <= 0 || roi.height <= 0) {
    throw InvalidInput(fmt::format("ROI size {}x{} must be positive", roi.width,
                                   roi.height));
  }
  return crop(r, roi.left, roi.top, roi.width, roi.height);
}

Raster fit_dims_64(const Raster& r, Interpolation mode) {
  if (r.width() < 64 || r.height() < 64) {
    throw InvalidInput(fmt::format(
        "image {}x{} is smaller than 64 pixels on a side", r.width(), r.height()));
  }
  const int w = r.width() / 64 * 64;
  const int h = r.height() / 64 * 64;
  if (w == r.width() && h == r.height()) return r;
  return resize(r, w, h, mode);
}

}  // namespace trackgen
