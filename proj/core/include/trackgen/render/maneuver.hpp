#pragma once

#include <variant>

#include "trackgen/render/trajectory.hpp"
#include "trackgen/road/layout.hpp"

namespace trackgen {

// Lane change to the left lane and back over [start, start + length] of
// route arclength. The lateral offset follows a raised cosine that peaks
// at one lane width in the middle of the window.
struct Overtake {
  double start = 0.0;
  double length = 1.0;
};

// Branch into space `space` of the `zone`-th parking zone and stop at its
// center.
struct Park {
  int space = 0;
  int zone = 0;
};

enum class CrossDirection { kStraight, kLeft, kRight };

// Take the chosen exit of the `intersection`-th intersection. Turning
// trajectories end at the end of the side arm.
struct CrossIntersection {
  CrossDirection direction = CrossDirection::kStraight;
  int intersection = 0;
};

using ManeuverSpec = std::variant<Overtake, Park, CrossIntersection>;

// Throws InvalidInput when the maneuver does not fit the layout: window
// outside the route or across an intersection, missing zone or
// intersection, space index out of range or occupied.
Trajectory insert_maneuver(const Trajectory& trajectory,
                           const ManeuverSpec& maneuver,
                           const RouteLayout& layout);

}  // namespace trackgen
