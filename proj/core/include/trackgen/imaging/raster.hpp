#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace trackgen {

// One sample per channel; 1-channel rasters use element 0 only.
using Pixel = std::array<std::uint8_t, 3>;

// Row-major 8-bit image with 1 (gray / class-ID) or 3 (RGB) channels.
// Pixel (0,0) is the top-left corner.
class Raster {
 public:
  Raster() = default;
  // Zero-filled raster. Throws InvalidInput on non-positive dimensions or
  // channels other than 1 and 3.
  Raster(int width, int height, int channels);
  // Adopts `data`, whose size must be width * height * channels.
  Raster(int width, int height, int channels, std::vector<std::uint8_t> data);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  bool empty() const noexcept { return data_.empty(); }
  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }

  std::span<const std::uint8_t> data() const noexcept { return data_; }
  std::span<std::uint8_t> data() noexcept { return data_; }

  bool contains(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  std::size_t offset(int x, int y) const noexcept {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)) *
           static_cast<std::size_t>(channels_);
  }

  std::uint8_t at(int x, int y, int c = 0) const noexcept {
    return data_[offset(x, y) + static_cast<std::size_t>(c)];
  }
  std::uint8_t& at(int x, int y, int c = 0) noexcept {
    return data_[offset(x, y) + static_cast<std::size_t>(c)];
  }

  Pixel pixel(int x, int y) const noexcept;
  void set_pixel(int x, int y, const Pixel& p) noexcept;
  void fill(const Pixel& p) noexcept;

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  int channels_ = 1;
  std::vector<std::uint8_t> data_;
};

}  // namespace trackgen
