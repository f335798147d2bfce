#include "trackgen/imaging/resize.hpp"

#include <fmt/format.h>

#include "trackgen/error.hpp"

namespace trackgen {

Raster resize(const Raster& src, int width, int height, Interpolation mode) {
  if (width == src.width() && height == src.height()) return src;
  Raster out(width, height, src.channels());
  const double sx = static_cast<double>(src.width()) / width;
  const double sy = static_cast<double>(src.height()) / height;
  for (int y = 0; y < height; ++y) {
    const double v = (y + 0.5) * sy - 0.5;
    for (int x = 0; x < width; ++x) {
      const double u = (x + 0.5) * sx - 0.5;
      out.set_pixel(x, y, sample(src, u, v, mode));
    }
  }
  return out;
}

Raster crop(const Raster& src, int left, int top, int width, int height) {
  if (width <= 0 || height <= 0 || left < 0 || top < 0 ||
      left + width > src.width() || top + height > src.height()) {
    throw InvalidInput(fmt::format(
        "crop rectangle ({}, {}, {}x{}) outside {}x{} image", left, top, width,
        height, src.width(), src.height()));
  }
  Raster out(width, height, src.channels());
  const std::size_t row_bytes =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(src.channels());
  for (int y = 0; y < height; ++y) {
    const auto from = src.data().begin() +
                      static_cast<std::ptrdiff_t>(src.offset(left, top + y));
    std::copy(from, from + static_cast<std::ptrdiff_t>(row_bytes),
              out.data().begin() + static_cast<std::ptrdiff_t>(out.offset(0, y)));
  }
  return out;
}

}  // namespace trackgen
