#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trackgen/imaging/raster.hpp"

namespace trackgen {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline Pixel to_pixel(Rgb c) { return {c.r, c.g, c.b}; }

struct ClassEntry {
  std::uint8_t id = 0;
  std::string name;
  Rgb color;
  friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
};

// Semantic roles the renderer paints. Each role is bound to the class entry
// whose name equals class_name(role).
enum class ClassRole {
  kUnlabeled,
  kLeftLane,
  kRightLane,
  kDashedCenterLine,
  kDoubleSolidCenterLine,
  kStartingLine,
  kStopLine,
  kCrosswalk,
  kFreeParkingSpace,
  kFreeParkingArea,
};

inline constexpr ClassRole kAllRoles[] = {
    ClassRole::kUnlabeled,         ClassRole::kLeftLane,
    ClassRole::kRightLane,         ClassRole::kDashedCenterLine,
    ClassRole::kDoubleSolidCenterLine, ClassRole::kStartingLine,
    ClassRole::kStopLine,          ClassRole::kCrosswalk,
    ClassRole::kFreeParkingSpace,  ClassRole::kFreeParkingArea,
};

std::string_view class_name(ClassRole role);

class ClassMap {
 public:
  ClassMap() = default;
  explicit ClassMap(std::vector<ClassEntry> entries)
      : entries_(std::move(entries)) {}

  // The ten track classes with fixed colors; id 0 is "unlabeled".
  static ClassMap defaults();

  const std::vector<ClassEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  const ClassEntry* find_id(int id) const noexcept;
  const ClassEntry* find_color(Rgb color) const noexcept;
  const ClassEntry* find_name(std::string_view name) const noexcept;

  // Id bound to `role`; throws InvalidInput when the map has no such entry.
  std::uint8_t id_for(ClassRole role) const;

  // One past the largest id, i.e. the confusion-matrix size that covers
  // every entry.
  int id_span() const noexcept;

  // Empty when all invariants hold (unique ids and colors, id 0 named
  // "unlabeled").
  std::vector<std::string> violations() const;

  friend bool operator==(const ClassMap&, const ClassMap&) = default;

 private:
  std::vector<ClassEntry> entries_;
};

// RGB class colors for a 1-channel id raster; throws InvalidInput on ids
// missing from `map`.
Raster colorize(const Raster& ids, const ClassMap& map);

// Class-map file: one `id name r g b` entry per line; names may contain
// spaces. `#` starts a comment.
ClassMap parse_class_map(std::string_view text);
std::string format_class_map(const ClassMap& map);

}  // namespace trackgen
