#include "trackgen/road/class_map.hpp"

#include <fmt/format.h>

#include <array>

#include "trackgen/error.hpp"
#include "trackgen/util/text.hpp"

namespace trackgen {

std::string_view class_name(ClassRole role) {
  switch (role) {
    case ClassRole::kUnlabeled: return "unlabeled";
    case ClassRole::kLeftLane: return "left lane";
    case ClassRole::kRightLane: return "right lane";
    case ClassRole::kDashedCenterLine: return "dashed center line";
    case ClassRole::kDoubleSolidCenterLine: return "double solid center line";
    case ClassRole::kStartingLine: return "starting line";
    case ClassRole::kStopLine: return "stop line";
    case ClassRole::kCrosswalk: return "crosswalk";
    case ClassRole::kFreeParkingSpace: return "free parking space";
    case ClassRole::kFreeParkingArea: return "free parking area";
  }
  return "";
}

ClassMap ClassMap::defaults() {
  return ClassMap({
      {0, "unlabeled", {0, 0, 0}},
      {1, "left lane", {0, 0, 255}},
      {2, "right lane", {0, 255, 0}},
      {3, "dashed center line", {255, 255, 0}},
      {4, "double solid center line", {255, 128, 0}},
      {5, "starting line", {255, 0, 255}},
      {6, "stop line", {255, 0, 0}},
      {7, "crosswalk", {0, 255, 255}},
      {8, "free parking space", {128, 0, 255}},
      {9, "free parking area", {0, 128, 128}},
  });
}

const ClassEntry* ClassMap::find_id(int id) const noexcept {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const ClassEntry* ClassMap::find_color(Rgb color) const noexcept {
  for (const auto& e : entries_) {
    if (e.color == color) return &e;
  }
  return nullptr;
}

const ClassEntry* ClassMap::find_name(std::string_view name) const noexcept {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::uint8_t ClassMap::id_for(ClassRole role) const {
  if (const auto* e = find_name(class_name(role))) return e->id;
  throw InvalidInput(
      fmt::format("class map has no entry named '{}'", class_name(role)));
}

int ClassMap::id_span() const noexcept {
  int span = 0;
  for (const auto& e : entries_) span = std::max(span, e.id + 1);
  return span;
}

std::vector<std::string> ClassMap::violations() const {
  std::vector<std::string> out;
  if (entries_.empty()) {
    out.emplace_back("class map is empty");
    return out;
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      const auto& a = entries_[i];
      const auto& b = entries_[j];
      if (a.id == b.id) {
        out.push_back(fmt::format("duplicate class id {}", a.id));
      }
      if (a.color == b.color) {
        out.push_back(fmt::format(
            "duplicate class color ({},{},{}) for class ids {} and {}",
            a.color.r, a.color.g, a.color.b, a.id, b.id));
      }
    }
  }
  const auto* zero = find_id(0);
  if (zero == nullptr || zero->name != "unlabeled") {
    out.emplace_back("class id 0 must be 'unlabeled'");
  }
  return out;
}

Raster colorize(const Raster& ids, const ClassMap& map) {
  if (ids.channels() != 1) {
    throw InvalidInput("colorize expects a 1-channel id raster");
  }
  std::array<const ClassEntry*, 256> lut{};
  for (const auto& e : map.entries()) lut[e.id] = &e;
  Raster out(ids.width(), ids.height(), 3);
  auto src = ids.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const ClassEntry* e = lut[src[i]];
    if (e == nullptr) {
      throw InvalidInput(fmt::format("class id {} is not in the class map", src[i]));
    }
    dst[3 * i] = e->color.r;
    dst[3 * i + 1] = e->color.g;
    dst[3 * i + 2] = e->color.b;
  }
  return out;
}

ClassMap parse_class_map(std::string_view text) {
  std::vector<ClassEntry> entries;
  for (const auto& line : util::significant_lines(text)) {
    const auto tokens = util::split_whitespace(line.text);
    if (tokens.size() < 5) {
      throw ParseError("class map entry needs 'id name r g b'", line.number);
    }
    auto channel = [&](std::string_view tok, const char* what) {
      const auto v = util::parse_int(tok, what, line.number);
      if (v < 0 || v > 255) {
        throw ParseError(fmt::format("{} must be in [0, 255]", what),
                         line.number);
      }
      return static_cast<std::uint8_t>(v);
    };
    ClassEntry e;
    e.id = channel(tokens[0], "class id");
    const std::size_t n = tokens.size();
    e.color = {channel(tokens[n - 3], "red"), channel(tokens[n - 2], "green"),
               channel(tokens[n - 1], "blue")};
    for (std::size_t i = 1; i + 3 < n; ++i) {
      if (i > 1) e.name += ' ';
      e.name += tokens[i];
    }
    entries.push_back(std::move(e));
  }
  ClassMap map(std::move(entries));
  if (const auto v = map.violations(); !v.empty()) {
    throw InvalidInput("invalid class map: " + v.front());
  }
  return map;
}

std::string format_class_map(const ClassMap& map) {
  std::string out;
  for (const auto& e : map.entries()) {
    out += fmt::format("{} {} {} {} {}\n", e.id, e.name, e.color.r, e.color.g,
                       e.color.b);
  }
  return out;
}

}  // namespace trackgen
