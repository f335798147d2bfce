#include "trackgen/imaging/raster.hpp"

#include <fmt/format.h>

#include "trackgen/error.hpp"

namespace trackgen {

namespace {

void check_shape(int width, int height, int channels) {
  if (width <= 0 || height <= 0) {
    throw InvalidInput(
        fmt::format("raster dimensions must be positive, got {}x{}", width,
                    height));
  }
  if (channels != 1 && channels != 3) {
    throw InvalidInput(
        fmt::format("raster channels must be 1 or 3, got {}", channels));
  }
}

}  // namespace

Raster::Raster(int width, int height, int channels)
    : width_(width), height_(height), channels_(channels) {
  check_shape(width, height, channels);
  data_.assign(pixel_count() * static_cast<std::size_t>(channels), 0);
}

Raster::Raster(int width, int height, int channels,
               std::vector<std::uint8_t> data)
    : width_(width), height_(height), channels_(channels),
      data_(std::move(data)) {
  check_shape(width, height, channels);
  if (data_.size() != pixel_count() * static_cast<std::size_t>(channels)) {
    throw InvalidInput(fmt::format(
        "raster data length {} does not match {}x{}x{}", data_.size(), width,
        height, channels));
  }
}

Pixel Raster::pixel(int x, int y) const noexcept {
  const std::size_t o = offset(x, y);
  if (channels_ == 1) return {data_[o], 0, 0};
  return {data_[o], data_[o + 1], data_[o + 2]};
}

void Raster::set_pixel(int x, int y, const Pixel& p) noexcept {
  const std::size_t o = offset(x, y);
  for (int c = 0; c < channels_; ++c) {
    data_[o + static_cast<std::size_t>(c)] = p[static_cast<std::size_t>(c)];
  }
}

void Raster::fill(const Pixel& p) noexcept {
  if (channels_ == 1) {
    std::fill(data_.begin(), data_.end(), p[0]);
    return;
  }
  for (std::size_t o = 0; o < data_.size(); o += 3) {
    data_[o] = p[0];
    data_[o + 1] = p[1];
    data_[o + 2] = p[2];
  }
}

}  // namespace trackgen
