#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trackgen/road/class_map.hpp"

namespace trackgen {

inline constexpr double kPi = 3.14159265358979323846;

enum class TurnDirection { kLeft, kRight };
enum class Side { kLeft, kRight };
enum class CenterLineStyle { kDashed, kDoubleSolid, kMissing };
enum class ParkingStyle {
  kSpaces,  // individual spaces, class "free parking space"
  kArea,    // continuous strip, class "free parking area"
};

struct Straight {
  double length = 1.0;  // m
  friend bool operator==(const Straight&, const Straight&) = default;
};

struct Arc {
  double radius = 1.0;  // m, along the road centerline
  double angle = kPi / 2;  // rad, magnitude in (0, 2*pi]
  TurnDirection direction = TurnDirection::kLeft;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Four-way crossing. The route passes straight through: an entry arm, the
// crossing box, an exit arm. Two side arms leave the box perpendicular to
// the route.
struct Intersection {
  double arm_length = 1.0;  // m, every arm
  double crossing_width = 0.8;  // m along the route; in [2, 4] lane widths
  friend bool operator==(const Intersection&, const Intersection&) = default;
};

struct ParkingZone {
  Side side = Side::kRight;
  int space_count = 3;
  double space_length = 0.35;  // m along the route
  double space_depth = 0.5;  // m away from the road edge
  std::vector<bool> occupied;  // one flag per space; empty means all free
  ParkingStyle style = ParkingStyle::kSpaces;
  friend bool operator==(const ParkingZone&, const ParkingZone&) = default;
};

using SegmentKind = std::variant<Straight, Arc, Intersection, ParkingZone>;

struct SegmentSpec {
  SegmentKind kind = Straight{};
  CenterLineStyle center_line = CenterLineStyle::kDashed;
  bool start_line = false;
  bool stop_line = false;
  bool crosswalk = false;
  friend bool operator==(const SegmentSpec&, const SegmentSpec&) = default;
};

// Marking dimensions, all in meters.
struct MarkingStyle {
  double dash_length = 0.2;
  double dash_gap = 0.2;
  double double_line_gap = 0.02;
  double start_line_width = 0.05;  // along the road
  double stop_line_width = 0.04;
  double crosswalk_length = 0.3;
  double crosswalk_stripe = 0.04;
  friend bool operator==(const MarkingStyle&, const MarkingStyle&) = default;
};

struct RouteLayout {
  double lane_width = 0.4;  // m, centerline to road edge
  double line_width = 0.02;  // m
  double meters_per_pixel = 0.005;
  std::optional<std::uint64_t> seed;
  MarkingStyle markings;
  std::vector<SegmentSpec> segments;
  ClassMap class_map = ClassMap::defaults();
  friend bool operator==(const RouteLayout&, const RouteLayout&) = default;
};

// Length of the segment along the route centerline.
double segment_length(const SegmentSpec& segment);

const char* kind_name(const SegmentKind& kind);

// Empty iff every layout, segment and class-map invariant holds.
std::vector<std::string> validate_layout(const RouteLayout& layout);

// Throws InvalidInput listing the violations, if any.
void require_valid(const RouteLayout& layout);

}  // namespace trackgen

namespace trackgen {

// Six-segment sample track: start straight, left curve, intersection,
// right curve, parking zone with a crosswalk straight after it.
RouteLayout sample_layout();

}  // namespace trackgen
