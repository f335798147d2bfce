#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "trackgen/imaging/raster.hpp"

namespace trackgen {

// Decodes a binary netpbm stream: P5 (gray) or P6 (RGB), maxval 255.
// Header tokens may be separated by any whitespace and `#` comments.
// Throws FormatError carrying the byte offset of the defect.
Raster read_raster(std::span<const std::uint8_t> bytes);

// Canonical encoding: "P5\n<w> <h>\n255\n" (P6 for RGB) followed by the
// samples. read_raster(write_raster(r)) == r.
std::vector<std::uint8_t> write_raster(const Raster& r);

Raster read_raster_file(const std::filesystem::path& path);
void write_raster_file(const std::filesystem::path& path, const Raster& r);

}  // namespace trackgen
