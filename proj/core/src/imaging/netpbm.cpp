#include "trackgen/imaging/netpbm.hpp"

#include <fmt/format.h>

#include <limits>
#include <string>

#include "trackgen/error.hpp"
#include "trackgen/util/files.hpp"

namespace trackgen {

namespace {

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

class HeaderReader {
 public:
  HeaderReader(std::span<const std::uint8_t> bytes, std::size_t pos)
      : bytes_(bytes), pos_(pos) {}

  std::size_t pos() const { return pos_; }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  // Reads a decimal header field; rejects anything that is not a digit run
  // followed by whitespace.
  long long read_uint(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw FormatError(fmt::format("{} out of range", what), start);
      }
      ++pos_;
    }
    if (pos_ == start) {
      if (pos_ >= bytes_.size()) {
        throw FormatError(fmt::format("truncated header, expected {}", what),
                          pos_);
      }
      throw FormatError(fmt::format("expected {}", what), pos_);
    }
    if (pos_ >= bytes_.size()) {
      throw FormatError("truncated header", pos_);
    }
    if (!is_space(bytes_[pos_])) {
      throw FormatError(fmt::format("malformed {}", what), pos_);
    }
    return value;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_;
};

}  // namespace

Raster read_raster(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
    throw FormatError("malformed magic number (expected P5 or P6)", 0);
  }
  const int channels = bytes[1] == '5' ? 1 : 3;
  if (bytes.size() > 2 && !is_space(bytes[2]) && bytes[2] != '#') {
    throw FormatError("malformed magic number (expected P5 or P6)", 2);
  }

  HeaderReader header(bytes, 2);
  const long long width = header.read_uint("width");
  const long long height = header.read_uint("height");
  header.skip_space_and_comments();
  const std::size_t maxval_pos = header.pos();
  const long long maxval = header.read_uint("maxval");
  if (maxval != 255) {
    throw FormatError(fmt::format("unsupported maxval {}", maxval), maxval_pos);
  }
  if (width == 0 || height == 0) {
    throw FormatError("zero image dimension", header.pos());
  }

  // Exactly one whitespace byte separates the header from the samples.
  const std::size_t payload = header.pos() + 1;
  const std::size_t expected = static_cast<std::size_t>(width) *
                               static_cast<std::size_t>(height) *
                               static_cast<std::size_t>(channels);
  if (bytes.size() < payload || bytes.size() - payload < expected) {
    throw FormatError(
        fmt::format("truncated payload: expected {} bytes, found {}", expected,
                    bytes.size() < payload ? 0 : bytes.size() - payload),
        bytes.size());
  }
  std::vector<std::uint8_t> data(bytes.begin() + static_cast<std::ptrdiff_t>(payload),
                                 bytes.begin() + static_cast<std::ptrdiff_t>(payload + expected));
  return Raster(static_cast<int>(width), static_cast<int>(height), channels,
                std::move(data));
}

std::vector<std::uint8_t> write_raster(const Raster& r) {
  const std::string header = fmt::format(
      "P{}\n{} {}\n255\n", r.channels() == 1 ? 5 : 6, r.width(), r.height());
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + r.data().size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), r.data().begin(), r.data().end());
  return out;
}

Raster read_raster_file(const std::filesystem::path& path) {
  return read_raster(util::read_binary_file(path));
}

void write_raster_file(const std::filesystem::path& path, const Raster& r) {
  util::write_binary_file(path, write_raster(r));
}

}  // namespace trackgen
