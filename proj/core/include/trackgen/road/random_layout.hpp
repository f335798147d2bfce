#pragma once

#include <cstdint>
#include <vector>

#include "trackgen/road/layout.hpp"

namespace trackgen {

enum class SegmentKindTag { kStraight, kArc, kIntersection, kParkingZone };

struct LayoutConstraints {
  int min_segments = 4;
  int max_segments = 8;
  std::vector<SegmentKindTag> kinds = {
      SegmentKindTag::kStraight, SegmentKindTag::kArc,
      SegmentKindTag::kIntersection, SegmentKindTag::kParkingZone};
  double min_length = 1.0;  // straight length range, m
  double max_length = 3.0;
  double min_radius = 0.8;  // m
  double max_radius = 2.5;
  double min_angle = kPi / 6;  // rad
  double max_angle = kPi / 2;
  // Retry successive seeds until the end point lies within one lane width
  // of the start.
  bool closed = false;
  int max_attempts = 20000;
};

// Throws InvalidInput describing the first unsatisfiable constraint.
void check_constraints(const LayoutConstraints& c, const RouteLayout& base);

// Pure function of (seed, constraints). Every result passes validate_layout
// and does not overlap itself. `base` supplies the global geometry
// (lane width, markings, class map). The seed actually used is recorded in
// the result, which differs from `seed` only for closed routes.
RouteLayout random_layout(std::uint64_t seed, const LayoutConstraints& c,
                          const RouteLayout& base = {});

// True when two road pieces that are far apart along the route come closer
// than the road width.
bool route_overlaps_itself(const RouteLayout& layout);

}  // namespace trackgen
